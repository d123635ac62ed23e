"""Breadth-first search over the Reidemeister move graph.

States are deduplicated by canonical code, so every diagram is expanded at
most once and the first time the target is generated its depth is minimal.
Results are minimal only within the crossing-bounded move graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .diagram import Diagram, canonical_form, normalize_labels
from .errors import BadParams, LimitsExceeded
from .invariants import cowrithe, move_lower_bounds, writhe
from .moves import ALL_KINDS, MoveKind, apply_move, enumerate_moves
from .torus_deform import MoveTrace, TraceStep

_GROWTH = {
    MoveKind.RI_CREATE: 1,
    MoveKind.RII_CREATE: 2,
}


@dataclass(frozen=True)
class SearchLimits:
    max_crossings: int
    max_depth: int
    max_states: int = 1_000_000
    allowed_kinds: frozenset = ALL_KINDS

    def check(self, *diagrams: Diagram) -> None:
        if self.max_depth < 0:
            raise BadParams("max_depth must be >= 0")
        for d in diagrams:
            if d.num_crossings > self.max_crossings:
                raise BadParams(
                    f"max_crossings={self.max_crossings} is below an endpoint's "
                    f"{d.num_crossings} crossings"
                )


@dataclass
class SearchResult:
    found: bool
    trace: MoveTrace | None
    explored_states: int
    frontier_peak: int
    depth_reached: int

    @property
    def length(self) -> int | None:
        return len(self.trace) if self.trace is not None else None

    @property
    def outcome(self) -> str:
        return "Found" if self.found else "NotFoundWithinLimits"


def _remaining_lower_bound(d: Diagram, wt: int, xt: int) -> int:
    # each move closes at most one unit of either gap
    return abs(writhe(d) - wt) + abs(cowrithe(d) - xt)


def bfs_min_moves(
    d1: Diagram,
    d2: Diagram,
    limits: SearchLimits,
    prune: bool = False,
) -> SearchResult:
    """Shortest move sequence from ``d1`` to a diagram isomorphic to ``d2``.

    With ``prune=True`` states that cannot reach the target within
    ``max_depth`` according to the writhe and cowrithe gaps are not queued;
    this never changes the reported length.
    """
    limits.check(d1, d2)
    # PD-normalized labels keep the emitted trace valid after a JSON round trip
    d1, _ = normalize_labels(d1)
    kinds = frozenset(limits.allowed_kinds)
    goal = canonical_form(d2)
    wt, xt = writhe(d2), cowrithe(d2)
    start_key = canonical_form(d1)
    parents: dict = {start_key: None}
    states: dict = {start_key: d1}

    def finish(key, depth_reached, peak):
        chain = []
        while parents[key] is not None:
            prev, move = parents[key]
            chain.append((move, key))
            key = prev
        chain.reverse()
        steps = [TraceStep(m, k.code) for m, k in chain]
        trace = MoveTrace(d1, steps, d2)
        bounds = move_lower_bounds(d1, d2)
        assert len(steps) >= bounds.total, (len(steps), bounds)
        return SearchResult(True, trace, len(parents), peak, depth_reached)

    if start_key == goal:
        return finish(start_key, 0, 1)

    frontier: list = [start_key]
    peak = 1
    for depth in range(limits.max_depth):
        nxt: list = []
        for key in frontier:
            d = states[key]
            for m in _moves_within(d, kinds, limits.max_crossings):
                child = apply_move(d, m)
                ck = canonical_form(child)
                if ck in parents:
                    continue
                if prune and depth + 1 + _remaining_lower_bound(child, wt, xt) > limits.max_depth:
                    continue
                parents[ck] = (key, m)
                states[ck] = child
                if ck == goal:
                    return finish(ck, depth + 1, max(peak, len(nxt) + 1))
                if len(parents) > limits.max_states:
                    raise LimitsExceeded(
                        f"state budget {limits.max_states} exhausted at depth {depth + 1}",
                        explored=len(parents),
                    )
                nxt.append(ck)
        frontier = nxt
        peak = max(peak, len(frontier))
        if not frontier:
            return SearchResult(False, None, len(parents), peak, depth + 1)
    return SearchResult(False, None, len(parents), peak, limits.max_depth)


def _moves_within(d: Diagram, kinds: Iterable[MoveKind], max_crossings: int):
    room = max_crossings - d.num_crossings
    allowed = {k for k in kinds if _GROWTH.get(k, 0) <= room}
    return enumerate_moves(d, allowed)
