"""Reidemeister moves on signed Gauss codes.

Every move is addressed by a dart of the diagram; the face on the left of
that dart is the face the move acts on (or, for creations, the face the new
monogon or bigon is placed in).

* RI delete / RII delete drop the visits of the deleted crossings.
* RIII swaps the two visits on each of the three trigon edges; crossings
  keep their labels, signs and over/under data.
* RI create inserts a kink into an edge; RII create pushes one boundary arc
  of a face across another arc of the same face.

Invariant deltas are measured by applying the move and recomputing, never
by local formulas.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .diagram import Dart, Diagram, Face, canonical_form
from .errors import IllegalMove, MalformedCode
from .invariants import cowrithe, writhe


class MoveKind(enum.Enum):
    RI_CREATE = "R1+"
    RI_DELETE = "R1-"
    RII_CREATE = "R2+"
    RII_DELETE = "R2-"
    RIII = "R3"

    @property
    def family(self) -> str:
        return self.value[:2]

    @property
    def rank(self) -> int:
        return list(MoveKind).index(self)


ALL_KINDS = frozenset(MoveKind)
DELETE_AND_SLIDE = frozenset({MoveKind.RI_DELETE, MoveKind.RII_DELETE, MoveKind.RIII})


def kinds_from_families(families: str) -> frozenset[MoveKind]:
    """Parse ``"R1,R2,R3"`` style selections."""
    wanted = {f.strip().upper() for f in families.split(",") if f.strip()}
    unknown = wanted - {"R1", "R2", "R3"}
    if unknown:
        raise ValueError(f"unknown move families {sorted(unknown)}")
    return frozenset(k for k in MoveKind if k.family in wanted)


@dataclass(frozen=True)
class Move:
    """One Reidemeister move.

    ``face`` holds the sorted corner crossings of the target face (display
    only); ``dart`` pins the face.  RI create uses ``sign``; RII create uses
    ``other`` (the second arc) and ``over`` (whether the ``dart`` arc goes
    over); RIII records the over-over edge in ``slide``.
    """

    kind: MoveKind
    dart: Dart | None
    face: tuple[int, ...] = ()
    sign: int | None = None
    other: Dart | None = None
    over: bool | None = None
    slide: tuple[int, bool] | None = None
    unknot_face: int | None = None

    def sort_key(self):
        def dk(d):
            return (-1, False, False) if d is None else tuple(d)
        return (
            self.kind.rank, self.face, dk(self.dart), dk(self.other),
            self.sign or 0, bool(self.over), self.unknot_face or 0,
        )

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "face": list(self.face)}
        if self.dart is not None:
            out["dart"] = self.dart.to_json()
        if self.unknot_face is not None:
            out["unknot_face"] = self.unknot_face
        if self.sign is not None:
            out["sign"] = self.sign
        if self.other is not None:
            out["other"] = self.other.to_json()
        if self.over is not None:
            out["over"] = self.over
        if self.slide is not None:
            out["slide"] = [self.slide[0], "o" if self.slide[1] else "u"]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Move":
        try:
            kind = MoveKind(data["kind"])
            dart = Dart.from_json(data["dart"]) if "dart" in data else None
            other = Dart.from_json(data["other"]) if "other" in data else None
            slide = None
            if "slide" in data:
                slide = (int(data["slide"][0]), data["slide"][1] == "o")
            return cls(
                kind, dart, tuple(int(c) for c in data.get("face", ())),
                sign=data.get("sign"), other=other, over=data.get("over"),
                slide=slide, unknot_face=data.get("unknot_face"),
            )
        except (KeyError, ValueError, TypeError, IndexError) as exc:
            raise MalformedCode(f"bad move record {data!r}: {exc}") from exc

    def __str__(self) -> str:
        where = ",".join(str(c) for c in self.face)
        return f"{self.kind.value}[{where}]"


@dataclass(frozen=True)
class MoveDelta:
    d_writhe: int
    d_cowrithe: int
    d_crossings: int


# -- legality ------------------------------------------------------------


def _edge_ends(d: Diagram, dart: Dart) -> tuple[tuple[int, bool], tuple[int, bool]]:
    i = d.edge_of(dart)
    return d.code[i], d.code[(i + 1) % len(d.code)]


def _is_monogon(d: Diagram, f: Face) -> bool:
    if f.degree != 1:
        return False
    a, b = _edge_ends(d, f.boundary[0])
    return a[0] == b[0]


def _bigon_over_edge(d: Diagram, f: Face) -> Dart | None:
    """The over-over dart of an RII-deletable bigon, else None."""
    if f.degree != 2 or len(set(f.corners)) != 2:
        return None
    d0, d1 = f.boundary
    if d.edge_of(d0) == d.edge_of(d1):
        return None
    for dart in f.boundary:
        (ca, oa), (cb, ob) = _edge_ends(d, dart)
        if ca == cb:
            return None
        if oa and ob:
            other = d1 if dart == d0 else d0
            (_, ua), (_, ub) = _edge_ends(d, other)
            if not ua and not ub:
                return dart
    return None


def _trigon_slide(d: Diagram, f: Face) -> tuple[int, bool] | None:
    """Key of the over-over edge of an RIII-admissible trigon, else None."""
    if f.degree != 3 or len(set(f.corners)) != 3:
        return None
    if len({d.edge_of(x) for x in f.boundary}) != 3:
        return None
    top = bottom = None
    for dart in f.boundary:
        a, b = _edge_ends(d, dart)
        if a[0] == b[0]:
            return None
        if a[1] and b[1]:
            top = a
        elif not a[1] and not b[1]:
            bottom = a
    if top is None or bottom is None:
        return None
    return top


def bigon_is_incoherent(d: Diagram, f: Face) -> bool:
    """True when both bigon edges run from the same corner to the other one,
    so their orientations do not form a directed cycle around the face."""
    starts = [_edge_ends(d, x)[0][0] for x in f.boundary]
    return starts[0] == starts[1]


# -- enumeration ---------------------------------------------------------


def enumerate_moves(d: Diagram, kinds=ALL_KINDS) -> list[Move]:
    kinds = frozenset(kinds)
    moves: list[Move] = []
    if not d.code:
        if MoveKind.RI_CREATE in kinds:
            for face in (0, 1):
                for sign in (1, -1):
                    moves.append(Move(MoveKind.RI_CREATE, None, (), sign=sign, unknot_face=face))
        if MoveKind.RII_CREATE in kinds:
            for face in (0, 1):
                for over in (True, False):
                    moves.append(Move(MoveKind.RII_CREATE, None, (), over=over, unknot_face=face))
        return sorted(moves, key=Move.sort_key)
    for f in d.faces:
        corners = tuple(sorted(set(f.corners)))
        anchor = min(f.boundary)
        if MoveKind.RI_DELETE in kinds and _is_monogon(d, f):
            moves.append(Move(MoveKind.RI_DELETE, anchor, corners))
        if MoveKind.RII_DELETE in kinds and _bigon_over_edge(d, f) is not None:
            moves.append(Move(MoveKind.RII_DELETE, anchor, corners))
        if MoveKind.RIII in kinds:
            slide = _trigon_slide(d, f)
            if slide is not None:
                moves.append(Move(MoveKind.RIII, anchor, corners, slide=slide))
        if MoveKind.RI_CREATE in kinds:
            for dart in f.boundary:
                for sign in (1, -1):
                    moves.append(Move(MoveKind.RI_CREATE, dart, corners, sign=sign))
        if MoveKind.RII_CREATE in kinds:
            darts = sorted(f.boundary)
            for a in range(len(darts)):
                for b in range(a + 1, len(darts)):
                    if d.edge_of(darts[a]) == d.edge_of(darts[b]):
                        continue
                    for over in (True, False):
                        moves.append(Move(MoveKind.RII_CREATE, darts[a], corners,
                                          other=darts[b], over=over))
    return sorted(moves, key=Move.sort_key)


# -- application ---------------------------------------------------------


def _without(d: Diagram, doomed: set[int]) -> Diagram:
    return Diagram(
        tuple(v for v in d.code if v[0] not in doomed),
        tuple(p for p in d.signs if p[0] not in doomed),
    )


def _face_for(d: Diagram, m: Move) -> Face:
    if m.dart is None:
        raise IllegalMove(f"{m.kind.value} needs a target dart")
    try:
        return d.face_of(m.dart)
    except MalformedCode as exc:
        raise IllegalMove(str(exc)) from exc


def apply_move(d: Diagram, m: Move) -> Diagram:
    handler = _HANDLERS[m.kind]
    return handler(d, m)


def _ri_delete(d: Diagram, m: Move) -> Diagram:
    f = _face_for(d, m)
    if not _is_monogon(d, f):
        raise IllegalMove(f"face {sorted(set(f.corners))} is not a monogon")
    return _without(d, {f.corners[0]})


def _rii_delete(d: Diagram, m: Move) -> Diagram:
    f = _face_for(d, m)
    if _bigon_over_edge(d, f) is None:
        raise IllegalMove(f"face {sorted(set(f.corners))} is not an RII-deletable bigon")
    return _without(d, set(f.corners))


def _riii(d: Diagram, m: Move) -> Diagram:
    f = _face_for(d, m)
    if _trigon_slide(d, f) is None:
        raise IllegalMove(f"face {sorted(set(f.corners))} does not admit an RIII move")
    code = list(d.code)
    n = len(code)
    for dart in f.boundary:
        i = d.edge_of(dart)
        j = (i + 1) % n
        code[i], code[j] = code[j], code[i]
    return Diagram(tuple(code), d.signs)


def _insert(code: list, edge: int, visits: list) -> list:
    """Insert ``visits`` (in traversal order) into edge ``edge``."""
    return code[:edge + 1] + visits + code[edge + 1:]


def _ri_create(d: Diagram, m: Move) -> Diagram:
    if m.sign not in (1, -1):
        raise IllegalMove("RI create needs a sign of +1 or -1")
    c = d.fresh_label()
    if not d.code:
        if m.unknot_face not in (0, 1):
            raise IllegalMove("RI create on the unknot needs unknot_face 0 or 1")
        over_first = (m.sign > 0) == (m.unknot_face == 1)
        return Diagram.build([(c, over_first), (c, not over_first)], {c: m.sign})
    _face_for(d, m)
    edge = d.edge_of(m.dart)
    # the kink lies on the right of the direction of travel iff (sign > 0) == over_first
    kink_right = not m.dart.forward
    over_first = (m.sign > 0) == kink_right
    code = _insert(list(d.code), edge, [(c, over_first), (c, not over_first)])
    return Diagram.build(code, {**d.sign_map, c: m.sign})


def _rii_create(d: Diagram, m: Move) -> Diagram:
    if m.over is None:
        raise IllegalMove("RII create needs the over/under choice")
    c1 = d.fresh_label()
    c2 = c1 + 1
    if not d.code:
        if m.unknot_face not in (0, 1):
            raise IllegalMove("RII create on the unknot needs unknot_face 0 or 1")
        s = 1 if m.unknot_face == 0 else -1
        sign1 = -s if m.over else s
        code = [(c1, m.over), (c2, m.over), (c2, not m.over), (c1, not m.over)]
        return Diagram.build(code, {c1: sign1, c2: -sign1})
    if m.other is None:
        raise IllegalMove("RII create needs a second arc")
    f = _face_for(d, m)
    if m.other not in f.boundary or m.other == m.dart:
        raise IllegalMove("the two arcs of an RII create must be distinct arcs of one face")
    e1, e2 = d.edge_of(m.dart), d.edge_of(m.other)
    if e1 == e2:
        raise IllegalMove("RII create across the two sides of a single edge is not supported")
    s1 = 1 if m.dart.forward else -1
    s2 = 1 if m.other.forward else -1
    # c1 is met first along the target arc, c2 first along the pushed arc
    sign1 = -s1 * s2 if m.over else s1 * s2
    along_target = [c1, c2] if m.other.forward else [c2, c1]
    along_finger = [c2, c1] if m.dart.forward else [c1, c2]
    code = list(d.code)
    # insert into the later edge first so the earlier index stays valid
    for edge, labels, over in sorted(
        [(e1, along_finger, m.over), (e2, along_target, not m.over)], reverse=True
    ):
        code = _insert(code, edge, [(c, over) for c in labels])
    return Diagram.build(code, {**d.sign_map, c1: sign1, c2: -sign1})


_HANDLERS = {
    MoveKind.RI_CREATE: _ri_create,
    MoveKind.RI_DELETE: _ri_delete,
    MoveKind.RII_CREATE: _rii_create,
    MoveKind.RII_DELETE: _rii_delete,
    MoveKind.RIII: _riii,
}


def move_delta(d: Diagram, m: Move) -> MoveDelta:
    after = apply_move(d, m)
    return MoveDelta(
        writhe(after) - writhe(d),
        cowrithe(after) - cowrithe(d),
        after.num_crossings - d.num_crossings,
    )


def inverse_moves(before: Diagram, m: Move, after: Diagram) -> list[Move]:
    """Moves on ``after`` that undo ``m`` (up to isomorphism)."""
    kinds = {
        MoveKind.RI_CREATE: MoveKind.RI_DELETE,
        MoveKind.RI_DELETE: MoveKind.RI_CREATE,
        MoveKind.RII_CREATE: MoveKind.RII_DELETE,
        MoveKind.RII_DELETE: MoveKind.RII_CREATE,
        MoveKind.RIII: MoveKind.RIII,
    }
    target = canonical_form(before)
    return [
        x for x in enumerate_moves(after, {kinds[m.kind]})
        if canonical_form(apply_move(after, x)) == target
    ]
