"""Grid moves: cyclic permutation, commutation, the eight (de)stabilizations,
corner normalization and the grid-level connected sum.

Stabilization subdivides a marked cell into a 2x2 block.  The type ``X:NW``
starts from an X and puts the single new O in the NW square of the block,
with the two X's in the corners adjacent to it; the other seven types are
the evident reflections / marker swaps.  Which types preserve the
Legendrian (resp. transverse) knot is recorded in classify_move and pinned
down by the grading test batteries.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .errors import (
    CornerConditionUnmet,
    IllegalCommutation,
    MultiComponent,
    NoSuchPattern,
    OutOfRange,
)
from .grid import GridDiagram, component_count

STAB_TYPES = ("X:NW", "X:SE", "X:NE", "X:SW", "O:NW", "O:SE", "O:NE", "O:SW")

LEGENDRIAN = "Legendrian"
TRANSVERSE_ONLY = "TransverseOnly"
POSITIVE_STAB = "PositiveStab"
TOPOLOGICAL = "Topological"

_LEGENDRIAN_STABS = {"X:NW", "X:SE", "O:NW", "O:SE"}
_NEGATIVE_STABS = {"X:NE", "O:SW"}  # negative stabilization of the knot
_POSITIVE_STABS = {"X:SW", "O:NE"}  # by elimination; confirmed by grading tests


@dataclass(frozen=True)
class GridMove:
    kind: str  # cycR | cycC | commR | commC | stab | destab
    arg: int = 0  # shift amount (cyc*) or lower row/left column (comm*)
    stab_type: str = ""
    col: int = 0
    row: int = 0

    def __str__(self):
        if self.kind in ("cycR", "cycC", "commR", "commC"):
            return f"{self.kind} {self.arg}"
        return f"{self.kind} {self.stab_type} {self.col} {self.row}"


def cyclic_rows(k):
    return GridMove("cycR", arg=k)


def cyclic_cols(k):
    return GridMove("cycC", arg=k)


def commute_rows(j):
    return GridMove("commR", arg=j)


def commute_cols(i):
    return GridMove("commC", arg=i)


def stabilize(stab_type, col, row):
    return GridMove("stab", stab_type=stab_type, col=col, row=row)


def destabilize(stab_type, col, row):
    return GridMove("destab", stab_type=stab_type, col=col, row=row)


def parse_move_script(text):
    """One move per line: ``cycR 1``, ``commC 3``, ``stab X:NW 2 4``, ..."""
    moves = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            if parts[0] in ("cycR", "cycC", "commR", "commC"):
                (kind, arg) = parts
                moves.append(GridMove(kind, arg=int(arg)))
            elif parts[0] in ("stab", "destab"):
                kind, stype, col, row = parts
                if stype not in STAB_TYPES:
                    raise ValueError(stype)
                moves.append(GridMove(kind, stab_type=stype, col=int(col), row=int(row)))
            else:
                raise ValueError(parts[0])
        except ValueError as exc:
            raise OutOfRange(f"move script line {lineno}: cannot parse {line!r}") from exc
    return moves


def classify_move(move):
    """Equivalence class preserved by the move.

    Cyclic permutation, commutation and NW/SE stabilizations preserve the
    Legendrian type; X:NE and O:SW only the transverse type (negative
    stabilization); X:SW and O:NE are positive stabilizations.
    """
    if move.kind in ("cycR", "cycC", "commR", "commC"):
        return LEGENDRIAN
    if move.stab_type in _LEGENDRIAN_STABS:
        return LEGENDRIAN
    if move.stab_type in _NEGATIVE_STABS:
        return TRANSVERSE_ONLY
    return POSITIVE_STAB


# -- elementary moves ----------------------------------------------------------


def _cyclic(G, row_shift, col_shift):
    n = G.n

    def shift_row(r):
        return (r - 1 + row_shift) % n + 1

    o = [0] * n
    x = [0] * n
    for i in range(n):
        j = (i + col_shift) % n
        o[j] = shift_row(G.sigma_O[i])
        x[j] = shift_row(G.sigma_X[i])
    return GridDiagram(n, tuple(o), tuple(x))


def _spans_commute(span_a, span_b):
    """Closed spans commute iff disjoint or strictly nested; shared endpoints
    and interleaving both obstruct the move."""
    a1, b1 = sorted(span_a)
    a2, b2 = sorted(span_b)
    if b1 < a2 or b2 < a1:
        return True
    if a1 < a2 and b2 < b1:
        return True
    if a2 < a1 and b1 < b2:
        return True
    return False


def _commute_rows(G, j):
    n = G.n
    if not (1 <= j <= n - 1):
        raise OutOfRange(f"row {j} not in 1..{n - 1}")
    span_j = (G.o_column_of_row(j), G.x_column_of_row(j))
    span_j1 = (G.o_column_of_row(j + 1), G.x_column_of_row(j + 1))
    if not _spans_commute(span_j, span_j1):
        raise IllegalCommutation(f"rows {j}, {j + 1} have interleaved marker spans")
    swap = {j: j + 1, j + 1: j}
    o = tuple(swap.get(r, r) for r in G.sigma_O)
    x = tuple(swap.get(r, r) for r in G.sigma_X)
    return GridDiagram(n, o, x)


def _commute_cols(G, i):
    n = G.n
    if not (1 <= i <= n - 1):
        raise OutOfRange(f"column {i} not in 1..{n - 1}")
    span_i = (G.sigma_O[i - 1], G.sigma_X[i - 1])
    span_i1 = (G.sigma_O[i], G.sigma_X[i])
    if not _spans_commute(span_i, span_i1):
        raise IllegalCommutation(f"columns {i}, {i + 1} have interleaved marker spans")
    o = list(G.sigma_O)
    x = list(G.sigma_X)
    o[i - 1], o[i] = o[i], o[i - 1]
    x[i - 1], x[i] = x[i], x[i - 1]
    return GridDiagram(n, tuple(o), tuple(x))


_CORNER_POS = {
    "NW": (0, 1),
    "NE": (1, 1),
    "SW": (0, 0),
    "SE": (1, 0),
}
_ADJACENT = {
    "NW": ("NE", "SW"),
    "NE": ("NW", "SE"),
    "SW": ("NW", "SE"),
    "SE": ("NE", "SW"),
}


def _stabilize(G, stab_type, c, r):
    n = G.n
    marker, direction = stab_type.split(":")
    if not (1 <= c <= n and 1 <= r <= n):
        raise OutOfRange(f"cell ({c}, {r}) outside the grid")
    primary = G.sigma_X if marker == "X" else G.sigma_O
    partner = G.sigma_O if marker == "X" else G.sigma_X
    if primary[c - 1] != r:
        raise NoSuchPattern(f"no {marker} at cell ({c}, {r})")

    def new_col(c0):
        return c0 if c0 < c else c0 + 1

    def new_row(r0):
        return r0 if r0 < r else r0 + 1

    markers = {"X": [], "O": []}
    for c0 in range(1, n + 1):
        if c0 == c:
            continue
        markers["X" if marker == "X" else "O"].append(
            (new_col(c0), new_row(primary[c0 - 1]))
        )
        markers["O" if marker == "X" else "X"].append(
            (new_col(c0), new_row(partner[c0 - 1]))
        )

    other = "O" if marker == "X" else "X"
    dx, dy = _CORNER_POS[direction]
    markers[other].append((c + dx, r + dy))
    for adj in _ADJACENT[direction]:
        ax, ay = _CORNER_POS[adj]
        markers[marker].append((c + ax, r + ay))
    # displaced partners: opposite block column / row from the new symbol
    col_partner_row = partner[c - 1]
    markers[other].append((c + (1 - dx), new_row(col_partner_row)))
    row_partner_col = partner.index(r) + 1
    markers[other].append((new_col(row_partner_col), r + (1 - dy)))

    o = [0] * (n + 1)
    x = [0] * (n + 1)
    for cc, rr in markers["O"]:
        o[cc - 1] = rr
    for cc, rr in markers["X"]:
        x[cc - 1] = rr
    return GridDiagram(n + 1, tuple(o), tuple(x))


def _block_pattern(stab_type):
    """Cell contents of the 2x2 block produced by a stabilization."""
    marker, direction = stab_type.split(":")
    other = "O" if marker == "X" else "X"
    pattern = {}
    pattern[_CORNER_POS[direction]] = other
    for adj in _ADJACENT[direction]:
        pattern[_CORNER_POS[adj]] = marker
    return pattern


def _destabilize(G, stab_type, c, r):
    n = G.n
    if not (1 <= c <= n - 1 and 1 <= r <= n - 1):
        raise OutOfRange(f"block corner ({c}, {r}) outside 1..{n - 1}")
    pattern = _block_pattern(stab_type)
    for dx in (0, 1):
        for dy in (0, 1):
            want = pattern.get((dx, dy), ".")
            if G.cell(c + dx, r + dy) != want:
                raise NoSuchPattern(
                    f"no {stab_type} block at ({c}, {r}): cell ({c + dx}, {r + dy})"
                    f" is {G.cell(c + dx, r + dy)!r}, expected {want!r}"
                )
    marker = stab_type.split(":")[0]
    block_cells = {(c + dx, r + dy) for dx in (0, 1) for dy in (0, 1)}

    def merge_col(c0):
        return c0 if c0 <= c else c0 - 1

    def merge_row(r0):
        return r0 if r0 <= r else r0 - 1

    o = [0] * (n - 1)
    x = [0] * (n - 1)
    for c0 in range(1, n + 1):
        for sigma, out in ((G.sigma_O, o), (G.sigma_X, x)):
            r0 = sigma[c0 - 1]
            if (c0, r0) in block_cells:
                continue
            out[merge_col(c0) - 1] = merge_row(r0)
    if marker == "X":
        x[c - 1] = r
    else:
        o[c - 1] = r
    return GridDiagram(n - 1, tuple(o), tuple(x))


def apply_move(G, move):
    """Apply one grid move, returning a new validated grid."""
    if move.kind == "cycR":
        return _cyclic(G, move.arg, 0)
    if move.kind == "cycC":
        return _cyclic(G, 0, move.arg)
    if move.kind == "commR":
        return _commute_rows(G, move.arg)
    if move.kind == "commC":
        return _commute_cols(G, move.arg)
    if move.kind == "stab":
        return _stabilize(G, move.stab_type, move.col, move.row)
    if move.kind == "destab":
        return _destabilize(G, move.stab_type, move.col, move.row)
    raise OutOfRange(f"unknown move kind {move.kind!r}")


def apply_moves(G, moves):
    for move in moves:
        G = apply_move(G, move)
    return G


def inverse_move(move, n_before):
    """The move undoing ``move`` on the grid it was applied to."""
    if move.kind == "cycR":
        return GridMove("cycR", arg=(-move.arg) % n_before)
    if move.kind == "cycC":
        return GridMove("cycC", arg=(-move.arg) % n_before)
    if move.kind in ("commR", "commC"):
        return move
    if move.kind == "stab":
        return GridMove("destab", stab_type=move.stab_type, col=move.col, row=move.row)
    if move.kind == "destab":
        return GridMove("stab", stab_type=move.stab_type, col=move.col, row=move.row)
    raise OutOfRange(f"unknown move kind {move.kind!r}")


# -- corner normalization and connected sum ------------------------------------


def has_corner_x(G):
    return G.sigma_X[G.n - 1] == G.n


def has_corner_o(G):
    return G.sigma_O[0] == 1


# Stabilization types that fix the transverse class: Legendrian isotopies
# plus the negative stabilizations.  Search order prefers the negative ones
# only after the isotopies.
_TRANSVERSE_SAFE_STABS = ("X:NW", "X:SE", "O:NW", "O:SE", "X:NE", "O:SW")


def _corner_pair(G):
    """Column of an X whose diagonal upper-right neighbour cell holds an O."""
    n = G.n
    for c in range(1, n + 1):
        r = G.sigma_X[c - 1]
        if G.sigma_O[c % n] == r % n + 1:
            return c, r
    return None


def _corner_moves(G):
    """Transverse-class-preserving moves tried by the normalization search."""
    for c in range(1, G.n):
        try:
            yield _commute_cols(G, c)
        except IllegalCommutation:
            pass
        try:
            yield _commute_rows(G, c)
        except IllegalCommutation:
            pass
    for stype in _TRANSVERSE_SAFE_STABS:
        sigma = G.sigma_X if stype[0] == "X" else G.sigma_O
        for c in range(1, G.n + 1):
            yield _stabilize(G, stype, c, sigma[c - 1])


def normalize_corners(G, max_extra=3, max_moves=6):
    """Grid for the same transverse-class knot with an X in the upper-right
    and an O in the lower-left corner cell.

    Already-normalized grids are returned unchanged.  Otherwise a shortest
    sequence of commutations and Legendrian/negative stabilizations is found
    by breadth-first search and finished with a cyclic permutation, so the
    self-linking number, the bigrading of x+ and the transverse invariant
    class are all preserved.  The grid grows by at most ``max_extra``.
    """
    if component_count(G) != 1:
        raise MultiComponent("corner normalization requires a knot")
    if has_corner_x(G) and has_corner_o(G):
        return G
    seen = {(G.sigma_O, G.sigma_X)}
    queue = deque([(G, 0)])
    found = None
    while queue:
        H, depth = queue.popleft()
        pair = _corner_pair(H)
        if pair is not None:
            found = (H, pair)
            break
        if depth >= max_moves:
            continue
        for H2 in _corner_moves(H):
            if H2.n > G.n + max_extra:
                continue
            key = (H2.sigma_O, H2.sigma_X)
            if key not in seen:
                seen.add(key)
                queue.append((H2, depth + 1))
    if found is None:
        raise CornerConditionUnmet(
            f"no corner normalization within {max_moves} moves / +{max_extra} size"
        )
    H, (cx, rx) = found
    out = _cyclic(H, (H.n - rx) % H.n, (H.n - cx) % H.n)
    assert has_corner_x(out) and has_corner_o(out)
    return out


def connect_sum(G1, G2):
    """Patch G2 onto G1 at G1's corner X and G2's corner O.

    Requires G1 to carry an X in its upper-right corner cell and G2 an O in
    its lower-left corner cell (normalize_corners arranges this).  The two
    corner markers are deleted; the result has size n1 + n2 - 1.
    """
    if not has_corner_x(G1):
        raise CornerConditionUnmet("first summand needs an X in its upper-right corner")
    if not has_corner_o(G2):
        raise CornerConditionUnmet("second summand needs an O in its lower-left corner")
    n1, n2 = G1.n, G2.n
    n = n1 + n2 - 1
    o = [0] * n
    x = [0] * n
    for i in range(1, n1):
        o[i - 1] = G1.sigma_O[i - 1]
        x[i - 1] = G1.sigma_X[i - 1]
    # shared column n1: O from G1, X from G2's first column
    o[n1 - 1] = G1.sigma_O[n1 - 1]
    x[n1 - 1] = G2.sigma_X[0] + n1 - 1
    for k in range(2, n2 + 1):
        o[n1 + k - 2] = G2.sigma_O[k - 1] + n1 - 1
        x[n1 + k - 2] = G2.sigma_X[k - 1] + n1 - 1
    return GridDiagram(n, tuple(o), tuple(x))


# -- random move sequences (verification batteries) ----------------------------


def legal_destabilizations(G, types=STAB_TYPES):
    """All (stab_type, col, row) whose block pattern is present."""
    found = []
    for stype in types:
        pattern = _block_pattern(stype)
        for c in range(1, G.n):
            for r in range(1, G.n):
                if all(
                    G.cell(c + dx, r + dy) == pattern.get((dx, dy), ".")
                    for dx in (0, 1)
                    for dy in (0, 1)
                ):
                    found.append((stype, c, r))
    return found


def random_move_sequence(G, length, rng=None, stab_types=_LEGENDRIAN_STABS, max_n=8):
    """Random legal move sequence drawn from the given stabilization types.

    Cyclic moves and commutations are always candidates; stabilizations only
    while the grid stays within ``max_n``, destabilizations whenever a
    matching block exists.  Returns (moves, final_grid).
    """
    rng = rng or random.Random()
    stab_types = sorted(stab_types)
    moves = []
    for _ in range(length):
        options = ["cycR", "cycC", "commR", "commC"]
        if G.n < max_n and stab_types:
            options += ["stab", "stab"]
        destabs = legal_destabilizations(G, stab_types) if G.n > 2 else []
        if destabs:
            options.append("destab")
        move = None
        while move is None:
            kind = rng.choice(options)
            if kind in ("cycR", "cycC"):
                move = GridMove(kind, arg=rng.randrange(1, G.n))
            elif kind in ("commR", "commC"):
                idx = rng.randrange(1, G.n)
                try:
                    apply_move(G, GridMove(kind, arg=idx))
                except (IllegalCommutation, OutOfRange):
                    options = [o for o in options if o not in ("commR", "commC")] or options
                    continue
                move = GridMove(kind, arg=idx)
            elif kind == "stab":
                stype = rng.choice(stab_types)
                marker = stype.split(":")[0]
                col = rng.randrange(1, G.n + 1)
                sigma = G.sigma_X if marker == "X" else G.sigma_O
                move = GridMove("stab", stab_type=stype, col=col, row=sigma[col - 1])
            else:
                stype, c, r = rng.choice(destabs)
                move = GridMove("destab", stab_type=stype, col=c, row=r)
        G = apply_move(G, move)
        moves.append(move)
    return moves, G
