"""Tour of the core objects: grids, fronts, gradings and homology reports.

Run with:  python3 demos/demo_basics.py
"""

from gridhfk import (
    bigrading,
    classical_invariants,
    parse_grid,
    render_grid,
    tilde_homology,
    x_plus,
)
from gridhfk.homology import format_qt, format_t

# A grid diagram is given by the rows of its O and X markers, column by
# column.  This is the standard 5x5 presentation of a trefoil.
trefoil = parse_grid(
    """
    n=5
    O=1,2,3,4,5
    X=3,4,5,1,2
    """
)

print("The grid (rows printed top to bottom):")
print(render_grid(trefoil))
print()

# The grid doubles as a front projection of a Legendrian representative of
# the mirror knot; its classical invariants come from the front.
ci = classical_invariants(trefoil)
print(f"Thurston-Bennequin number tb = {ci.tb}")
print(f"rotation number            r = {ci.r}")
print(f"self-linking numbers       sl+ = {ci.sl_plus}, sl- = {ci.sl_minus}")
print()

# The distinguished generator x+ sits at the upper-right corners of the X
# cells.  Its Alexander grading recovers (sl+ + 1)/2.
xp = x_plus(trefoil)
bg = bigrading(trefoil, xp)
print(f"x+ = {xp} with bigrading (M, A) = ({bg.M}, {bg.A})")
print(f"check: (sl+ + 1)/2 = {(ci.sl_plus + 1) // 2}")
print()

# The homology report carries the fully blocked ranks, the hat ranks
# extracted by exact division, and the Alexander polynomial mod 2.
report = tilde_homology(trefoil)
print("fully blocked Poincare polynomial (q tracks Maslov, t Alexander):")
print(" ", format_qt(report.ranks))
print("hat Poincare polynomial:")
print(" ", format_qt(report.hat_poincare))
print("total hat rank:", report.hat_total_rank())
print("Alexander polynomial mod 2:", format_t(report.alexander_mod2))
