import pytest

from torusmoves.braid import BraidWord, closure, torus_braid, torus_diagram
from torusmoves.diagram import Diagram
from torusmoves.errors import BadParams, UnknownCrossing
from torusmoves.invariants import (
    chord_diagram,
    contribution_closed_form,
    cowrithe,
    cowrithe_closed_form,
    interleave_count,
    interleaved,
    interleaving_matrix,
    move_lower_bounds,
    writhe,
)

# hand-computed oracle values
OVER = {2: 4, 3: 21, 4: 64, 5: 150, 6: 300, 7: 539, 8: 896}
UNDER = {2: 3, 3: 16, 4: 50, 5: 120, 6: 245, 7: 448, 8: 756}


def test_trefoil():
    d = torus_diagram(2, 3)
    assert writhe(d) == 3
    assert cowrithe(d) == 3
    cd = chord_diagram(d)
    assert len(list(cd.pairs())) == 3


def test_unknot_and_kink():
    assert cowrithe(Diagram.unknot()) == 0
    kink = closure(BraidWord(2, (1,)))
    assert writhe(kink) == 1
    assert cowrithe(kink) == 0


def test_nested_unknot_has_no_interleaving():
    d = closure(BraidWord(3, (1, -2)))
    assert cowrithe(d) == 0
    assert writhe(d) == 0


def test_closed_form_table():
    for n in OVER:
        assert cowrithe_closed_form(n, "over") == OVER[n]
        assert cowrithe_closed_form(n, "under") == UNDER[n]
    with pytest.raises(BadParams):
        cowrithe_closed_form(1, "over")
    with pytest.raises(BadParams):
        cowrithe_closed_form(3, "sideways")


@pytest.mark.parametrize("n", range(2, 7))
def test_diagram_matches_table(n):
    assert cowrithe(torus_diagram(n + 1, n)) == OVER[n]
    assert cowrithe(torus_diagram(n, n + 1)) == UNDER[n]
    assert writhe(torus_diagram(n + 1, n)) == n * n
    assert writhe(torus_diagram(n, n + 1)) == n * n - 1


def test_two_strand_torus_values():
    assert cowrithe(torus_diagram(5, 2)) == 12
    assert cowrithe(torus_diagram(2, 5)) == 10


def test_per_crossing_small_cases():
    # D(4,3): first b_1, b_2, b_3 sit at word positions 0, 1, 2
    d = torus_diagram(4, 3)
    assert [interleave_count(d, k) for k in range(3)] == [4, 6, 4]
    assert [contribution_closed_form(3, k, "over") for k in (1, 2, 3)] == [4, 6, 4]
    d = torus_diagram(3, 4)
    assert [interleave_count(d, k) for k in range(2)] == [4, 4]


def test_interleave_count_sums_to_twice_cowrithe():
    d = closure(BraidWord(4, (1, -2, 3, 2, -1, 3, 2)))
    assert sum(interleave_count(d, c) for c in d.crossings) == 2 * cowrithe(d)


def test_interleaving_queries():
    d = torus_diagram(2, 3)
    cd = chord_diagram(d)
    assert interleaved(cd, 0, 1)
    with pytest.raises(UnknownCrossing):
        interleaved(cd, 0, 99)
    with pytest.raises(ValueError):
        interleaved(cd, 1, 1)
    with pytest.raises(UnknownCrossing):
        interleave_count(d, 42)
    order, mat = interleaving_matrix(d)
    assert order == [0, 1, 2]
    assert all(mat[i][j] == mat[j][i] for i in range(3) for j in range(3))


def test_lower_bounds():
    b = move_lower_bounds(torus_diagram(3, 2), torus_diagram(2, 3))
    assert (b.ri_lower, b.rii_riii_lower, b.total) == (1, 1, 2)
    b = move_lower_bounds(torus_diagram(5, 4), torus_diagram(4, 5))
    assert (b.ri_lower, b.rii_riii_lower) == (1, 14)
    assert len(torus_braid(5, 4)) == 16
