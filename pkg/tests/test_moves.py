from collections import Counter

import pytest

from conftest import random_closures
from torusmoves.braid import BraidWord, closure, torus_diagram
from torusmoves.diagram import Diagram, canonical_form, is_isomorphic
from torusmoves.errors import IllegalMove, MalformedCode
from torusmoves.invariants import cowrithe, writhe
from torusmoves.moves import (
    ALL_KINDS,
    DELETE_AND_SLIDE,
    Move,
    MoveKind,
    apply_move,
    bigon_is_incoherent,
    enumerate_moves,
    inverse_moves,
    kinds_from_families,
    move_delta,
)

SAMPLE = random_closures(40, seed=5, max_crossings=7)


def test_kind_families():
    assert kinds_from_families("R1,R2,R3") == ALL_KINDS
    assert kinds_from_families("R3") == {MoveKind.RIII}
    assert MoveKind.RII_DELETE.family == "R2"


def test_trefoil_move_menu():
    # alternating bigons and trigons admit no deletion or slide
    assert enumerate_moves(torus_diagram(2, 3), DELETE_AND_SLIDE) == []


def test_kink_deletion_gives_unknot():
    d = closure(BraidWord(2, (1,)))
    moves = enumerate_moves(d, {MoveKind.RI_DELETE})
    assert moves
    assert apply_move(d, moves[0]) == Diagram.unknot()


def test_bigon_deletion():
    # b1 b1^-1 inside a three-strand closure pokes one strand under another
    d = closure(BraidWord(3, (1, -1, 1, 2)))
    moves = enumerate_moves(d, {MoveKind.RII_DELETE})
    assert len(moves) == 2
    for m in moves:
        after = apply_move(d, m)
        assert after.num_crossings == 2
        assert move_delta(d, m).d_writhe == 0
        incoherent = bigon_is_incoherent(d, d.face_of(m.dart))
        assert move_delta(d, m).d_cowrithe == (1 if incoherent else 0)


def test_d32_has_one_slide_to_a_kink():
    d = torus_diagram(3, 2)
    slides = enumerate_moves(d, {MoveKind.RIII})
    assert slides
    assert all(move_delta(d, m).d_cowrithe in (-1, 1) for m in slides)
    assert any(move_delta(d, m).d_cowrithe == -1 for m in slides)


def test_unknot_creation_moves():
    u = Diagram.unknot()
    moves = enumerate_moves(u)
    assert {m.kind for m in moves} == {MoveKind.RI_CREATE, MoveKind.RII_CREATE}
    for m in moves:
        after = apply_move(u, m)
        assert after.euler_characteristic() == 2
        back = inverse_moves(u, m, after)
        assert back


def _all_moves(d):
    return enumerate_moves(d, ALL_KINDS)


@pytest.mark.parametrize("i", range(0, 40, 4))
def test_every_move_is_planar_with_expected_deltas(i):
    d = SAMPLE[i]
    for m in _all_moves(d):
        after = apply_move(d, m)
        assert after.euler_characteristic() == 2
        dw = writhe(after) - writhe(d)
        dx = cowrithe(after) - cowrithe(d)
        dn = after.num_crossings - d.num_crossings
        if m.kind is MoveKind.RI_CREATE:
            assert (dn, dx, dw) == (1, 0, m.sign)
        elif m.kind is MoveKind.RI_DELETE:
            assert dn == -1 and dx == 0 and abs(dw) == 1
        elif m.kind is MoveKind.RII_CREATE:
            assert dn == 2 and dw == 0 and dx in (0, -1)
        elif m.kind is MoveKind.RII_DELETE:
            assert dn == -2 and dw == 0
            assert dx == (1 if bigon_is_incoherent(d, d.face_of(m.dart)) else 0)
        else:
            assert dn == 0 and dw == 0 and dx in (-1, 1)
        assert move_delta(d, m) == type(move_delta(d, m))(dw, dx, dn)


@pytest.mark.parametrize("i", range(1, 40, 8))
def test_every_move_has_an_inverse(i):
    d = SAMPLE[i]
    for m in _all_moves(d):
        after = apply_move(d, m)
        assert inverse_moves(d, m, after), m


def test_ri_create_lands_in_the_addressed_face():
    for d in SAMPLE[:15]:
        for m in enumerate_moves(d, {MoveKind.RI_CREATE}):
            here = d.face_of(m.dart)
            twin = d.dart(d.edge_of(m.dart), not m.dart.forward)
            there = d.face_of(twin)
            if here.id == there.id:
                continue
            before = Counter(f.degree for f in d.faces)
            after = Counter(f.degree for f in apply_move(d, m).faces)
            expected = before.copy()
            expected[here.degree] -= 1
            expected[there.degree] -= 1
            expected[here.degree + 2] += 1
            expected[there.degree + 1] += 1
            expected[1] += 1
            assert +after == +expected, (d, m)


def test_enumeration_is_deterministic():
    d = SAMPLE[3]
    assert enumerate_moves(d) == enumerate_moves(d)
    moved = [canonical_form(apply_move(d, m)) for m in enumerate_moves(d)]
    again = [canonical_form(apply_move(d, m)) for m in enumerate_moves(d)]
    assert moved == again


def test_move_json_round_trip():
    d = SAMPLE[2]
    for m in enumerate_moves(d):
        assert Move.from_json(m.to_json()) == m
    with pytest.raises(MalformedCode):
        Move.from_json({"kind": "R9"})


def test_illegal_moves_rejected():
    d = closure(BraidWord(3, (1, -1, 1, 2)))
    bigon = enumerate_moves(d, {MoveKind.RII_DELETE})[0]
    trigon = next(f for f in d.faces if f.degree == 3)
    with pytest.raises(IllegalMove):
        apply_move(d, Move(MoveKind.RII_DELETE, trigon.boundary[0], bigon.face))
    with pytest.raises(IllegalMove):
        apply_move(d, Move(MoveKind.RI_DELETE, trigon.boundary[0]))
    t = torus_diagram(2, 3)
    assert enumerate_moves(t, {MoveKind.RII_DELETE}) == []


def test_slide_then_inverse_restores():
    d = torus_diagram(4, 3)
    for m in enumerate_moves(d, {MoveKind.RIII}):
        after = apply_move(d, m)
        back = inverse_moves(d, m, after)
        assert back and is_isomorphic(apply_move(after, back[0]), d)
