import pytest

from torusmoves.braid import BraidWord, closure, first_occurrence, torus_braid, torus_diagram
from torusmoves.diagram import is_isomorphic
from torusmoves.errors import BadParams, MalformedCode, MultiComponent, NotCoprime


def test_torus_braid_word():
    assert torus_braid(3, 2).letters == (1, 2, 1, 2)
    assert torus_braid(2, 3).letters == (1, 1, 1)
    assert len(torus_braid(5, 4)) == 16


def test_torus_parameters_validated():
    with pytest.raises(NotCoprime):
        torus_braid(4, 2)
    with pytest.raises(BadParams):
        torus_braid(1, 3)


def test_parse_and_generators():
    w = BraidWord.parse("1 -2, 1")
    assert w.strands == 3 and w.letters == (1, -2, 1)
    with pytest.raises(MalformedCode):
        BraidWord(3, (3,))
    with pytest.raises(BadParams):
        BraidWord(1, ())


def test_permutation_and_components():
    assert torus_braid(3, 2).components() == 1
    assert BraidWord(2, (1, 1)).components() == 2
    assert BraidWord(3, (1, 2)).permutation() == (2, 0, 1)


def test_closure_labels_are_word_positions():
    d = torus_diagram(3, 2)
    assert sorted(d.crossings) == [0, 1, 2, 3]
    assert d.is_positive()
    assert first_occurrence(torus_braid(3, 2), 2) == 1


def test_closure_of_two_component_word_rejected():
    # the two-strand word b1 b1^-1 closes to a two-component link
    with pytest.raises(MultiComponent):
        closure(BraidWord(2, (1, -1)))


def test_nested_two_crossing_unknot():
    d = closure(BraidWord(3, (1, -2)))
    assert d.num_crossings == 2
    assert sorted(d.sign_map.values()) == [-1, 1]


def test_closure_invariant_under_word_rotation():
    w = BraidWord(3, (1, 1, -2, 1, -2, -2))
    for k in range(len(w)):
        assert is_isomorphic(closure(w.rotated(k)), closure(w))


def test_torus_diagram_sizes():
    for n in range(2, 7):
        assert torus_diagram(n + 1, n).num_crossings == n * n
        assert torus_diagram(n, n + 1).num_crossings == n * n - 1
