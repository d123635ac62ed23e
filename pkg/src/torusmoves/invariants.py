"""Writhe, chord diagrams and cowrithe.

Interleaving is decided purely from the Gauss sequence: two chords cross iff
their endpoints alternate around the circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .diagram import Diagram
from .errors import BadParams, UnknownCrossing


@dataclass(frozen=True)
class ChordDiagram:
    """Circle of 2V chord endpoints in traversal order plus one chord per crossing."""

    circle: tuple[int, ...]
    chords: dict[int, tuple[int, int]]
    signs: dict[int, int]

    def __len__(self) -> int:
        return len(self.chords)

    def interleaved(self, p: int, q: int) -> bool:
        return interleaved(self, p, q)

    def pairs(self):
        """Yield ``(p, q, sign product)`` for every interleaved unordered pair."""
        for p, q in combinations(sorted(self.chords), 2):
            if _alternate(self.chords[p], self.chords[q]):
                yield p, q, self.signs[p] * self.signs[q]


@dataclass(frozen=True)
class BoundsReport:
    ri_lower: int
    rii_riii_lower: int

    @property
    def total(self) -> int:
        return self.ri_lower + self.rii_riii_lower


def writhe(d: Diagram) -> int:
    return sum(s for _, s in d.signs)


def chord_diagram(d: Diagram) -> ChordDiagram:
    ends: dict[int, list[int]] = {}
    for i, (c, _) in enumerate(d.code):
        ends.setdefault(c, []).append(i)
    return ChordDiagram(
        tuple(c for c, _ in d.code),
        {c: (a, b) for c, (a, b) in ends.items()},
        dict(d.signs),
    )


def _alternate(a: tuple[int, int], b: tuple[int, int]) -> bool:
    lo, hi = a
    return (lo < b[0] < hi) != (lo < b[1] < hi)


def interleaved(cd: ChordDiagram, p: int, q: int) -> bool:
    for x in (p, q):
        if x not in cd.chords:
            raise UnknownCrossing(f"crossing {x} is not in the diagram")
    if p == q:
        raise ValueError("a crossing cannot be interleaved with itself")
    return _alternate(cd.chords[p], cd.chords[q])


def cowrithe(d: Diagram) -> int:
    return sum(sign for _, _, sign in chord_diagram(d).pairs())


def interleave_count(d: Diagram, x: int) -> int:
    """Signed number of crossings interleaved with ``x``.

    Each interleaved partner contributes sign(x) * sign(partner); summed over
    all crossings this counts every interleaved pair twice.
    """
    cd = chord_diagram(d)
    if x not in cd.chords:
        raise UnknownCrossing(f"crossing {x} is not in the diagram")
    mine = cd.chords[x]
    return sum(
        cd.signs[x] * cd.signs[y]
        for y, ends in cd.chords.items()
        if y != x and _alternate(mine, ends)
    )


def interleaving_matrix(d: Diagram) -> tuple[list[int], list[list[int]]]:
    """Crossing order and the matrix of signed pair products (0 if not interleaved)."""
    cd = chord_diagram(d)
    order = sorted(cd.chords)
    mat = [[0] * len(order) for _ in order]
    for a, p in enumerate(order):
        for b, q in enumerate(order):
            if p != q and _alternate(cd.chords[p], cd.chords[q]):
                mat[a][b] = cd.signs[p] * cd.signs[q]
    return order, mat


def _exact_sixth(numerator: int) -> int:
    assert numerator % 6 == 0, numerator
    return numerator // 6


def cowrithe_closed_form(n: int, side: str) -> int:
    """Cowrithe of D(n+1, n) (``side="over"``) or D(n, n+1) (``side="under"``)."""
    if n < 2:
        raise BadParams(f"n must be >= 2, got {n}")
    if side == "over":
        return _exact_sixth((n - 1) * n * n * (n + 4))
    if side == "under":
        return _exact_sixth((n - 1) * n * (n + 1) ** 2)
    raise BadParams(f"side must be 'over' or 'under', got {side!r}")


def contribution_closed_form(n: int, k: int, side: str) -> int:
    """Interleave count of the first b_k crossing of D(n+1, n) or D(n, n+1)."""
    if side == "over":
        if not 1 <= k <= n:
            raise BadParams(f"k must lie in 1..{n}")
        return 2 * k * (n - 1) - 2 * (k - 1) ** 2
    if side == "under":
        if not 1 <= k <= n - 1:
            raise BadParams(f"k must lie in 1..{n - 1}")
        return 2 * (k * n - 1) - 2 * (k * k - 1)
    raise BadParams(f"side must be 'over' or 'under', got {side!r}")


def move_lower_bounds(d1: Diagram, d2: Diagram) -> BoundsReport:
    """RI moves change the writhe by one and leave the cowrithe alone; RII and
    RIII moves change the cowrithe by at most one and leave the writhe alone."""
    return BoundsReport(
        abs(writhe(d1) - writhe(d2)),
        abs(cowrithe(d1) - cowrithe(d2)),
    )
