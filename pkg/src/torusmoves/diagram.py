"""Oriented knot diagrams on the sphere.

A diagram is stored as its signed Gauss code: the visits to crossings in
traversal order, each flagged over or under, plus one sign per crossing.
For a connected diagram this determines the rotation system at every
crossing, and hence the plane map, so faces, planar-diagram codes and
canonical forms are all derived views of the same tuple.

Crossing slots are numbered counterclockwise starting from the incoming
under-strand.  Slot 2 is the outgoing under-strand.  At a positive crossing
the over-strand enters at slot 3 and leaves at slot 1; at a negative crossing
it enters at slot 1 and leaves at slot 3.

Edge ``i`` runs from visit ``i`` to visit ``i + 1`` (cyclically), so a
diagram with V crossings has E = 2V edges.  A *dart* is an edge together with
a direction; faces are traced so that every dart has its face on the left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple, Sequence

from .errors import MalformedCode, MultiComponent, NonPlanar

Visit = tuple[int, bool]


class Token(NamedTuple):
    crossing: int
    over: bool
    sign: int


class Dart(NamedTuple):
    """An edge, keyed by the visit it leaves, traversed forward or backward."""

    crossing: int
    over: bool
    forward: bool

    def to_json(self) -> list:
        return [self.crossing, "o" if self.over else "u", 1 if self.forward else -1]

    @classmethod
    def from_json(cls, data: Sequence) -> "Dart":
        c, ou, direction = data
        if ou not in ("o", "u") or direction not in (1, -1):
            raise MalformedCode(f"bad dart {data!r}")
        return cls(int(c), ou == "o", direction == 1)


@dataclass(frozen=True)
class Face:
    id: int
    boundary: tuple[Dart, ...]
    corners: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.boundary)


@dataclass(frozen=True)
class CanonicalCode:
    code: str
    crossings: int

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class Diagram:
    """Immutable oriented knot diagram.

    ``code`` lists ``(crossing, is_over)`` visits in traversal order and
    ``signs`` is a sorted tuple of ``(crossing, sign)`` pairs.  Use
    :meth:`build` to construct one from a plain mapping of signs.
    """

    code: tuple[Visit, ...]
    signs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen: dict[int, list[bool]] = {}
        for c, over in self.code:
            seen.setdefault(c, []).append(bool(over))
        for c, flags in seen.items():
            if sorted(flags) != [False, True]:
                raise MalformedCode(f"crossing {c} must be visited once over and once under")
        sign_map = dict(self.signs)
        if set(sign_map) != set(seen) or len(sign_map) != len(self.signs):
            raise MalformedCode("signs must be given for exactly the crossings in the code")
        if any(s not in (1, -1) for s in sign_map.values()):
            raise MalformedCode("crossing signs must be +1 or -1")
        if len(self.faces) != self.num_crossings + 2:
            raise NonPlanar(
                f"Euler check failed: V={self.num_crossings} E={self.num_edges} "
                f"F={len(self.faces)}"
            )

    @classmethod
    def build(cls, code: Iterable[Sequence], signs: Mapping[int, int]) -> "Diagram":
        code = tuple((int(c), bool(o)) for c, o in code)
        return cls(code, tuple(sorted((int(c), int(s)) for c, s in signs.items())))

    @classmethod
    def unknot(cls) -> "Diagram":
        return cls((), ())

    # -- basic views -----------------------------------------------------

    @cached_property
    def sign_map(self) -> dict[int, int]:
        return dict(self.signs)

    def sign(self, crossing: int) -> int:
        return self.sign_map[crossing]

    @property
    def crossings(self) -> tuple[int, ...]:
        return tuple(c for c, _ in self.signs)

    @property
    def num_crossings(self) -> int:
        return len(self.signs)

    @property
    def num_edges(self) -> int:
        return len(self.code)

    def is_positive(self) -> bool:
        return all(s == 1 for _, s in self.signs)

    def fresh_label(self) -> int:
        return max(self.crossings, default=-1) + 1

    @cached_property
    def positions(self) -> dict[Visit, int]:
        return {v: i for i, v in enumerate(self.code)}

    def visits_of(self, crossing: int) -> tuple[int, int]:
        """Return the traversal indices of the (over, under) visits."""
        return self.positions[(crossing, True)], self.positions[(crossing, False)]

    def tokens(self) -> tuple[Token, ...]:
        s = self.sign_map
        return tuple(Token(c, o, s[c]) for c, o in self.code)

    # -- rotation system -------------------------------------------------

    def slot(self, index: int, incoming: bool) -> int:
        c, over = self.code[index]
        if not over:
            return 0 if incoming else 2
        if self.sign_map[c] > 0:
            return 3 if incoming else 1
        return 1 if incoming else 3

    @cached_property
    def _halfedges(self) -> dict[tuple[int, int], tuple[int, bool]]:
        table = {}
        for i, (c, _) in enumerate(self.code):
            table[(c, self.slot(i, True))] = (i, True)
            table[(c, self.slot(i, False))] = (i, False)
        return table

    def slot_edges(self, crossing: int) -> tuple[int, int, int, int]:
        """Edge indices at slots 0..3 of ``crossing``."""
        n = len(self.code)
        out = []
        for s in range(4):
            i, incoming = self._halfedges[(crossing, s)]
            out.append((i - 1) % n if incoming else i)
        return tuple(out)

    def dart(self, edge: int, forward: bool) -> Dart:
        c, o = self.code[edge]
        return Dart(c, o, forward)

    def edge_of(self, dart: Dart) -> int:
        try:
            return self.positions[(dart.crossing, dart.over)]
        except KeyError:
            raise MalformedCode(f"no edge leaves visit {dart.crossing}{'o' if dart.over else 'u'}")

    def _next_dart(self, d: int) -> int:
        n = len(self.code)
        edge, backward = divmod(d, 2)
        if backward:
            j, s = edge, self.slot(edge, False)
        else:
            j = (edge + 1) % n
            s = self.slot(j, True)
        c = self.code[j][0]
        k, incoming = self._halfedges[(c, (s - 1) % 4)]
        if incoming:
            return 2 * ((k - 1) % n) + 1
        return 2 * k

    def _arrival(self, d: int) -> int:
        edge, backward = divmod(d, 2)
        j = edge if backward else (edge + 1) % len(self.code)
        return self.code[j][0]

    @cached_property
    def faces(self) -> tuple[Face, ...]:
        if not self.code:
            return (Face(0, (), ()), Face(1, (), ()))
        n_darts = 2 * len(self.code)
        seen = [False] * n_darts
        orbits = []
        for start in range(n_darts):
            if seen[start]:
                continue
            orbit = []
            d = start
            while not seen[d]:
                seen[d] = True
                orbit.append(d)
                d = self._next_dart(d)
            if d != start:
                raise MalformedCode("face tracing did not close up")
            orbits.append(orbit)
        faces = []
        for fid, orbit in enumerate(orbits):
            faces.append(Face(
                fid,
                tuple(self.dart(d // 2, d % 2 == 0) for d in orbit),
                tuple(self._arrival(d) for d in orbit),
            ))
        return tuple(faces)

    @cached_property
    def _face_of_dart(self) -> dict[Dart, int]:
        return {d: f.id for f in self.faces for d in f.boundary}

    def face_of(self, dart: Dart) -> Face:
        """The face on the left of ``dart``."""
        try:
            return self.faces[self._face_of_dart[dart]]
        except KeyError:
            raise MalformedCode(f"{dart} is not a dart of this diagram")

    def euler_characteristic(self) -> int:
        return self.num_crossings - self.num_edges + len(self.faces)

    # -- transformations -------------------------------------------------

    def rotated(self, k: int) -> "Diagram":
        """Same diagram with the basepoint moved forward by ``k`` visits."""
        if not self.code:
            return self
        k %= len(self.code)
        return Diagram(self.code[k:] + self.code[:k], self.signs)

    def reversed(self) -> "Diagram":
        return Diagram(tuple(reversed(self.code)), self.signs)

    def relabeled(self, mapping: Mapping[int, int]) -> "Diagram":
        return Diagram.build(
            ((mapping[c], o) for c, o in self.code),
            {mapping[c]: s for c, s in self.signs},
        )

    def __repr__(self) -> str:
        body = " ".join(f"{c}{'o' if o else 'u'}{'+' if self.sign_map[c] > 0 else '-'}"
                        for c, o in self.code)
        return f"Diagram<{self.num_crossings}: {body}>"


# -- Gauss codes ---------------------------------------------------------


def gauss_code(d: Diagram, basepoint: int = 0, direction: int = 1) -> tuple[Token, ...]:
    """Signed oriented Gauss code read from visit ``basepoint``.

    With ``direction=-1`` the knot is read against its orientation, starting
    at the same visit.
    """
    toks = d.tokens()
    if not toks:
        return ()
    n = len(toks)
    if direction == 1:
        return tuple(toks[(basepoint + i) % n] for i in range(n))
    if direction == -1:
        return tuple(toks[(basepoint - i) % n] for i in range(n))
    raise ValueError("direction must be +1 or -1")


def from_gauss(tokens: Iterable[Sequence]) -> Diagram:
    """Build a diagram from ``(crossing, over, sign)`` tokens."""
    code, signs = [], {}
    for c, over, sign in tokens:
        if signs.setdefault(c, sign) != sign:
            raise MalformedCode(f"crossing {c} carries two different signs")
        code.append((c, over))
    return Diagram.build(code, signs)


def _serialize(tokens: Sequence[Token]) -> tuple[int, ...]:
    relabel: dict[int, int] = {}
    out = []
    for c, over, sign in tokens:
        k = relabel.setdefault(c, len(relabel))
        out.append(4 * k + (0 if over else 2) + (0 if sign > 0 else 1))
    return tuple(out)


def _readings(toks: tuple[Token, ...]):
    n = len(toks)
    doubled = toks + toks
    rev = tuple(reversed(toks))
    rev2 = rev + rev
    for i in range(n):
        yield doubled[i:i + n]
    for i in range(n):
        yield rev2[i:i + n]


def _best_reading(d: Diagram) -> tuple[tuple[int, ...], tuple[Token, ...]]:
    return min(((_serialize(r), r) for r in _readings(d.tokens())), key=lambda p: p[0])


def canonical_form(d: Diagram) -> CanonicalCode:
    """Lexicographically least relabeled signed Gauss code over all
    basepoints and both traversal directions."""
    if not d.code:
        return CanonicalCode("O", 0)
    best = min(_serialize(r) for r in _readings(d.tokens()))
    text = ".".join(f"{v >> 2}{'ou'[(v >> 1) & 1]}{'+-'[v & 1]}" for v in best)
    return CanonicalCode(f"{d.num_crossings}:{text}", d.num_crossings)


def is_isomorphic(d1: Diagram, d2: Diagram) -> bool:
    if d1.num_crossings != d2.num_crossings:
        return False
    return canonical_form(d1) == canonical_form(d2)


def isomorphism(d1: Diagram, d2: Diagram) -> dict[int, int] | None:
    """A crossing relabeling carrying ``d1`` onto ``d2``, or None."""
    if not is_isomorphic(d1, d2):
        return None
    if not d1.code:
        return {}
    _, r1 = _best_reading(d1)
    _, r2 = _best_reading(d2)
    return {a.crossing: b.crossing for a, b in zip(r1, r2)}


# -- planar diagram codes ------------------------------------------------


def export_pd(d: Diagram) -> tuple[list[list[int]], list[int]]:
    """PD tuples (edges 1..2V, counterclockwise from the incoming under-edge)
    and crossing signs, crossings ordered by first visit."""
    order = []
    for c, _ in d.code:
        if c not in order:
            order.append(c)
    pd = [[e + 1 for e in d.slot_edges(c)] for c in order]
    return pd, [d.sign(c) for c in order]


def diagram_from_pd(pd: Sequence[Sequence[int]], signs: Sequence[int] | None = None) -> Diagram:
    """Build a diagram from planar-diagram 4-tuples.

    Crossing ``j`` gets label ``j``.  When ``signs`` is omitted the over-strand
    direction is inferred from consecutive edge numbering, which only works
    for codes numbered along the orientation.
    """
    pd = [tuple(int(e) for e in t) for t in pd]
    if any(len(t) != 4 for t in pd):
        raise MalformedCode("each PD entry needs exactly four edge ids")
    if not pd:
        return Diagram.unknot()
    counts: dict[int, int] = {}
    for t in pd:
        for e in t:
            counts[e] = counts.get(e, 0) + 1
    bad = sorted(e for e, k in counts.items() if k != 2)
    if bad:
        raise MalformedCode(f"edge ids must appear exactly twice; offending: {bad}")
    if signs is None:
        signs = [_infer_sign(t, len(counts)) for t in pd]
    if len(signs) != len(pd) or any(s not in (1, -1) for s in signs):
        raise MalformedCode("need one sign (+1/-1) per crossing")

    # head[e] = visit the edge runs into; tail[visit] = edge leaving it
    head: dict[int, Visit] = {}
    tail: dict[Visit, int] = {}
    for j, (a, b, c, dd) in enumerate(pd):
        over_in, over_out = (dd, b) if signs[j] > 0 else (b, dd)
        for e, visit in ((a, (j, False)), (over_in, (j, True))):
            if e in head:
                raise MalformedCode(f"edge {e} enters two crossings; orientation is inconsistent")
            head[e] = visit
        for e, visit in ((c, (j, False)), (over_out, (j, True))):
            if visit in tail or e in tail.values():
                raise MalformedCode(f"edge {e} leaves two crossings; orientation is inconsistent")
            tail[visit] = e
    start = min(counts)
    code = []
    e = start
    while True:
        visit = head[e]
        code.append(visit)
        e = tail[visit]
        if e == start:
            break
        if len(code) > 2 * len(pd):
            raise MalformedCode("traversal does not close up")
    if len(code) != 2 * len(pd):
        raise MultiComponent(f"traversal covers {len(code)} of {2 * len(pd)} visits")
    # start the code at the visit edge ``start`` leaves from, so edge numbering survives
    code = code[-1:] + code[:-1]
    return Diagram.build(code, dict(enumerate(signs)))


def _infer_sign(t: tuple[int, int, int, int], n_edges: int) -> int:
    _, b, _, d = t
    up = (d % n_edges) + 1 == b
    down = (b % n_edges) + 1 == d
    if up != down:
        return 1 if up else -1
    raise MalformedCode(f"cannot infer over-strand direction of {list(t)} without signs (ambiguous or non-consecutive)")


def normalize_labels(d: Diagram) -> tuple[Diagram, dict[int, int]]:
    """Relabel ``d`` exactly as a PD export/import round trip would.

    Returns the relabeled diagram and the old-to-new label map.
    """
    pd, signs = export_pd(d)
    fresh = diagram_from_pd(pd, signs)
    return fresh, {a[0]: b[0] for a, b in zip(d.code, fresh.code)}


def diagram_to_json(d: Diagram) -> dict:
    pd, signs = export_pd(d)
    return {"pd": pd, "signs": signs}


def diagram_from_json(data: Mapping | str) -> Diagram:
    if isinstance(data, str):
        data = json.loads(data)
    if "pd" not in data:
        raise MalformedCode("diagram JSON needs a 'pd' field")
    return diagram_from_pd(data["pd"], data.get("signs"))
