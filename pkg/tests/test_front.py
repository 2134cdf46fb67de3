import pytest

from gridhfk import (
    GridDiagram,
    MultiComponent,
    bigrading,
    classical_invariants,
    front_projection,
    x_minus,
    x_plus,
)
from gridhfk.moves import apply_move, random_move_sequence, stabilize

from conftest import random_knot


def test_unknot_front():
    front = front_projection(GridDiagram(2, (1, 2), (2, 1)))
    assert len(front.crossings) == 0
    assert front.cusp_counts() == (1, 1)


def test_unknot_invariants(unknot):
    ci = classical_invariants(unknot)
    assert (ci.tb, ci.r) == (-1, 0)
    assert ci.sl_plus == -1 and ci.sl_minus == -1


def test_trefoil_front(trefoil):
    front = front_projection(trefoil)
    assert len(front.crossings) == 3
    assert front.writhe == 3


def test_trefoil_invariants(trefoil):
    ci = classical_invariants(trefoil)
    assert (ci.tb, ci.r) == (1, 0)
    assert ci.sl_plus == 1


def test_figure_eight_invariants(figure_eight):
    # maximal Thurston-Bennequin representative of the figure-eight knot
    ci = classical_invariants(figure_eight)
    assert (ci.tb, ci.r) == (-3, 0)


def test_multi_component_rejected():
    G = GridDiagram(4, (1, 2, 3, 4), (2, 1, 4, 3))
    with pytest.raises(MultiComponent):
        front_projection(G)


def test_cusp_count_even(rng):
    for _ in range(25):
        G = random_knot(rng, rng.randint(2, 7))
        up, down = front_projection(G).cusp_counts()
        assert (up + down) % 2 == 0


def test_self_linking_matches_alexander_grading(rng):
    # A(x+) = (sl_plus + 1) / 2 and M(x+) = sl_plus + 1, and likewise for
    # x- with sl_minus: the classical invariants and the grading formulas
    # are computed by entirely separate code paths.
    for _ in range(60):
        G = random_knot(rng, rng.randint(2, 7))
        ci = classical_invariants(G)
        bgp = bigrading(G, x_plus(G))
        bgm = bigrading(G, x_minus(G))
        assert (bgp.M, 2 * bgp.A) == (ci.sl_plus + 1, ci.sl_plus + 1)
        assert (bgm.M, 2 * bgm.A) == (ci.sl_minus + 1, ci.sl_minus + 1)


def test_invariance_under_legendrian_moves(rng):
    for _ in range(30):
        G = random_knot(rng, rng.randint(3, 6))
        ci = classical_invariants(G)
        _, G2 = random_move_sequence(G, 6, rng)
        ci2 = classical_invariants(G2)
        assert (ci2.tb, ci2.r) == (ci.tb, ci.r)


@pytest.mark.parametrize(
    "stab_type,dtb,dr",
    [
        ("X:NW", 0, 0),
        ("X:SE", 0, 0),
        ("O:NW", 0, 0),
        ("O:SE", 0, 0),
        ("X:NE", -1, -1),  # negative stabilization
        ("O:SW", -1, -1),
        ("X:SW", -1, 1),  # positive stabilization
        ("O:NE", -1, 1),
    ],
)
def test_stabilization_deltas(trefoil, stab_type, dtb, dr):
    ci = classical_invariants(trefoil)
    marker_rows = trefoil.sigma_X if stab_type[0] == "X" else trefoil.sigma_O
    G2 = apply_move(trefoil, stabilize(stab_type, 2, marker_rows[1]))
    ci2 = classical_invariants(G2)
    assert (ci2.tb - ci.tb, ci2.r - ci.r) == (dtb, dr)
