import pytest

from gridhfk import (
    GridDiagram,
    IllegalCommutation,
    NoSuchPattern,
    apply_move,
    apply_moves,
    classify_move,
    classical_invariants,
    component_count,
    connect_sum,
    inverse_move,
    normalize_corners,
    parse_move_script,
)
from gridhfk.errors import CornerConditionUnmet, MultiComponent, OutOfRange
from gridhfk.homology import alexander_polynomial
from gridhfk.moves import (
    GridMove,
    STAB_TYPES,
    commute_cols,
    commute_rows,
    cyclic_cols,
    cyclic_rows,
    destabilize,
    has_corner_o,
    has_corner_x,
    legal_destabilizations,
    random_move_sequence,
    stabilize,
)

from conftest import random_knot


def test_cyclic_row_swap_on_2x2():
    G = GridDiagram(2, (1, 2), (2, 1))
    assert apply_move(G, cyclic_rows(1)) == GridDiagram(2, (2, 1), (1, 2))


def test_cyclic_preserves_components(rng):
    for _ in range(10):
        G = random_knot(rng, 6)
        shifted = apply_move(G, cyclic_rows(rng.randrange(1, 6)))
        shifted = apply_move(shifted, cyclic_cols(rng.randrange(1, 6)))
        assert component_count(shifted) == component_count(G)


def test_cyclic_full_turn_is_identity(trefoil):
    G = apply_move(trefoil, cyclic_rows(trefoil.n))
    assert G == trefoil


def test_commutation_legality_case_split():
    # column spans nested -> legal; interleaved -> illegal
    G = GridDiagram(4, (2, 3, 1, 4), (4, 1, 3, 2))
    with pytest.raises(IllegalCommutation):
        apply_move(G, commute_cols(2))


def test_stabilize_grows_and_keeps_knot(trefoil):
    for stab_type in STAB_TYPES:
        rows = trefoil.sigma_X if stab_type[0] == "X" else trefoil.sigma_O
        G2 = apply_move(trefoil, stabilize(stab_type, 3, rows[2]))
        assert G2.n == trefoil.n + 1
        assert component_count(G2) == 1


def test_stabilize_requires_marker(trefoil):
    with pytest.raises(NoSuchPattern):
        apply_move(trefoil, stabilize("X:NW", 1, trefoil.sigma_O[0]))


def test_stab_destab_round_trip(rng):
    for _ in range(30):
        G = random_knot(rng, rng.randint(2, 6))
        stab_type = rng.choice(sorted(STAB_TYPES))
        col = rng.randint(1, G.n)
        rows = G.sigma_X if stab_type[0] == "X" else G.sigma_O
        move = stabilize(stab_type, col, rows[col - 1])
        G2 = apply_move(G, move)
        back = apply_move(G2, inverse_move(move, G.n))
        assert back == G


def test_destabilize_requires_pattern(trefoil):
    with pytest.raises(NoSuchPattern):
        apply_move(trefoil, destabilize("X:NW", 1, 1))


def test_legal_destabilizations_found_after_stabilizing(trefoil):
    G2 = apply_move(trefoil, stabilize("O:SE", 2, trefoil.sigma_O[1]))
    found = legal_destabilizations(G2)
    assert any(stype == "O:SE" for stype, _, _ in found)
    stype, c, r = found[0]
    assert apply_move(G2, destabilize(stype, c, r)).n == trefoil.n


def test_inverse_move_round_trip(rng):
    for _ in range(20):
        G = random_knot(rng, rng.randint(3, 6))
        moves, G2 = random_move_sequence(G, 5, rng)
        sizes = [G.n]
        H = G
        for m in moves:
            H = apply_move(H, m)
            sizes.append(H.n)
        for m, n_before in zip(reversed(moves), reversed(sizes[:-1])):
            H = apply_move(H, inverse_move(m, n_before))
        assert H == G


def test_classify_move():
    assert classify_move(cyclic_rows(1)) == "Legendrian"
    assert classify_move(commute_rows(2)) == "Legendrian"
    for t in ("X:NW", "X:SE", "O:NW", "O:SE"):
        assert classify_move(stabilize(t, 1, 1)) == "Legendrian"
    for t in ("X:NE", "O:SW"):
        assert classify_move(stabilize(t, 1, 1)) == "TransverseOnly"
    for t in ("X:SW", "O:NE"):
        assert classify_move(stabilize(t, 1, 1)) == "PositiveStab"


def test_parse_move_script():
    moves = parse_move_script("# comment\ncycR 1\n\ncommC 3\nstab X:NW 2 4\ndestab O:SE 1 1\n")
    assert [m.kind for m in moves] == ["cycR", "commC", "stab", "destab"]
    assert moves[2].stab_type == "X:NW" and moves[2].col == 2 and moves[2].row == 4


def test_parse_move_script_rejects_junk():
    with pytest.raises(OutOfRange):
        parse_move_script("wiggle 3\n")


def test_move_script_preserves_alexander(trefoil):
    moves = parse_move_script("cycR 1\ncycC 2\n")
    G2 = apply_moves(trefoil, moves)
    assert alexander_polynomial(G2) == alexander_polynomial(trefoil)


# -- corner normalization and connected sum -----------------------------------


def test_normalize_corners_fast_path(unknot_corner_x):
    # this grid has both corner markers already
    G = GridDiagram(2, (2, 1), (1, 2))
    assert has_corner_x(G) and not has_corner_o(G)
    Gn = normalize_corners(G)
    assert has_corner_x(Gn) and has_corner_o(Gn)


def test_normalize_corners_identity_when_ready():
    G = GridDiagram(3, (1, 3, 2), (2, 1, 3))
    assert has_corner_x(G) and has_corner_o(G)
    assert normalize_corners(G) is G


def test_normalize_corners_preserves_transverse_data(rng):
    for _ in range(10):
        G = random_knot(rng, rng.randint(2, 5))
        Gn = normalize_corners(G)
        assert has_corner_x(Gn) and has_corner_o(Gn)
        ci, cin = classical_invariants(G), classical_invariants(Gn)
        assert cin.sl_plus == ci.sl_plus
        assert component_count(Gn) == 1


def test_normalize_corners_rejects_links():
    G = GridDiagram(4, (1, 2, 3, 4), (2, 1, 4, 3))
    with pytest.raises(MultiComponent):
        normalize_corners(G)


def test_connect_sum_worked_example():
    G1 = GridDiagram(2, (2, 1), (1, 2))
    G2 = GridDiagram(2, (1, 2), (2, 1))
    S = connect_sum(G1, G2)
    assert S == GridDiagram(3, (2, 1, 3), (1, 3, 2))
    assert component_count(S) == 1
    assert alexander_polynomial(S) == {0}


def test_connect_sum_requires_corners(unknot, trefoil):
    with pytest.raises(CornerConditionUnmet):
        connect_sum(unknot, unknot)  # first factor lacks the corner X
    with pytest.raises(CornerConditionUnmet):
        connect_sum(GridDiagram(2, (2, 1), (1, 2)), GridDiagram(2, (2, 1), (1, 2)))


def test_connect_sum_size_and_components(trefoil_corner_x, trefoil):
    S = connect_sum(trefoil_corner_x, trefoil)
    assert S.n == 9
    assert component_count(S) == 1


def test_connect_sum_sl_additivity(trefoil_corner_x, trefoil, unknot, unknot_corner_x):
    pairs = [
        (unknot_corner_x, unknot),
        (trefoil_corner_x, unknot),
        (trefoil_corner_x, trefoil),
    ]
    for G1, G2 in pairs:
        sl = classical_invariants(connect_sum(G1, G2)).sl_plus
        expected = classical_invariants(G1).sl_plus + classical_invariants(G2).sl_plus + 1
        assert sl == expected


def test_random_move_sequence_stays_valid(rng):
    for _ in range(10):
        G = random_knot(rng, 4)
        moves, G2 = random_move_sequence(G, 8, rng)
        assert component_count(G2) == 1
        assert apply_moves(G, moves) == G2
