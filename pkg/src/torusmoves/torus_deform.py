"""The explicit deformation of D(n+1, n) into D(n, n+1) and trace certification.

The deformation runs in three phases:

A. the overpath gamma_0 (through the first b_n, the second b_{n-1}, ...,
   the last b_1) slides over every crossing below it, one trigon at a time;
   (n-1)n/2 RIII moves, after which a monogon has appeared;
B. one RI move deletes that monogon, leaving the closed n-braid
   (b_1...b_{n-1})^n (b_{n-1}...b_1);
C. for k = 1, ..., n-2 the (n-k)-th strand of that braid is moved as the
   middle strand of 2k(n-k-1) trigon slides: k(n-k-1) in which it runs
   under-then-over along the trigon edge, then k(n-k-1) over-then-under.

Each phase is resolved to concrete faces by a depth-first descent that only
accepts slides matching the phase's rule and lowering the cowrithe by one.
Ties are broken by the engine's canonical move order and are recorded as
ambiguous steps.  If a rule ever fails, the descent falls back to any
cowrithe-lowering slide and flags those steps; this never happens for the
schedules exercised by the test suite.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from .braid import BraidWord, closure, torus_braid, torus_diagram
from .diagram import (
    Diagram,
    canonical_form,
    diagram_from_json,
    diagram_to_json,
    is_isomorphic,
    isomorphism,
    normalize_labels,
)
from .errors import (
    BadParams,
    IllegalMove,
    IllegalStep,
    InternalScheduleError,
    MalformedCode,
    StateMismatch,
    TargetMismatch,
)
from .invariants import cowrithe, writhe
from .moves import Move, MoveKind, apply_move, enumerate_moves


@dataclass(frozen=True)
class TraceStep:
    move: Move
    state: str
    phase: str = ""

    def to_json(self) -> dict:
        out = self.move.to_json()
        out["state"] = self.state
        if self.phase:
            out["phase"] = self.phase
        return out

    @classmethod
    def from_json(cls, data: dict) -> "TraceStep":
        if "state" not in data:
            raise MalformedCode("trace step lacks its post-state code")
        return cls(Move.from_json(data), str(data["state"]), str(data.get("phase", "")))


@dataclass
class MoveTrace:
    start: Diagram
    steps: list[TraceStep]
    target: Diagram
    n: int | None = None
    ambiguous_steps: list[int] = field(default_factory=list)
    fallback_steps: list[int] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "start": diagram_to_json(self.start),
            "steps": [s.to_json() for s in self.steps],
            "target": diagram_to_json(self.target),
        }

    def dumps(self) -> str:
        # one step per line keeps traces diffable
        lines = ",\n    ".join(json.dumps(s.to_json(), sort_keys=True) for s in self.steps)
        return (
            "{\n"
            f'  "n": {json.dumps(self.n)},\n'
            f'  "start": {json.dumps(diagram_to_json(self.start))},\n'
            f'  "steps": [\n    {lines}\n  ],\n'
            f'  "target": {json.dumps(diagram_to_json(self.target))}\n'
            "}\n"
        )

    @classmethod
    def from_json(cls, data: dict | str) -> "MoveTrace":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(
                diagram_from_json(data["start"]),
                [TraceStep.from_json(s) for s in data["steps"]],
                diagram_from_json(data["target"]),
                data.get("n"),
            )
        except KeyError as exc:
            raise MalformedCode(f"trace JSON lacks {exc}") from exc


@dataclass
class DeformReport:
    n: int | None
    riii_count: int
    ri_count: int
    rii_count: int
    cowrithe_deltas: list[int]
    writhe_deltas: list[int]
    positive: bool
    final_matches_target: bool
    cowrithe_path: list[int]
    writhe_path: list[int]
    phase_counts: dict[str, int]
    euler_ok: bool = True

    @property
    def total(self) -> int:
        return self.riii_count + self.ri_count + self.rii_count


# -- predictions ---------------------------------------------------------


def phase_counts(n: int) -> list[tuple[str, int]]:
    """Predicted number of moves in each phase: A, B, then C1..C(n-2)."""
    if n < 2:
        raise BadParams(f"n must be >= 2, got {n}")
    out = [("A", (n - 1) * n // 2), ("B", 1)]
    out += [(f"C{k}", 2 * k * (n - k - 1)) for k in range(1, n - 1)]
    return out


def predicted_move_count(n: int) -> tuple[int, int]:
    """(RIII count, RI count) of the deformation."""
    if n < 2:
        raise BadParams(f"n must be >= 2, got {n}")
    closed = (n - 1) * n * (2 * n - 1)
    assert closed % 6 == 0
    riii = closed // 6
    by_phase = sum(c for name, c in phase_counts(n) if name != "B")
    assert by_phase == riii, (by_phase, riii)
    return riii, 1


# -- generation ----------------------------------------------------------


def _edge_visits(d: Diagram, m: Move):
    f = d.face_of(m.dart)
    n = len(d.code)
    for dart in f.boundary:
        i = d.edge_of(dart)
        yield d.code[i], d.code[(i + 1) % n]


def _slides_gamma(gamma: set[int]):
    """gamma_0 is the over-over edge of the trigon."""
    def rule(d: Diagram, m: Move, used: int) -> bool:
        return any(
            a[1] and b[1] and a[0] in gamma and b[0] in gamma
            for a, b in _edge_visits(d, m)
        )
    return rule


def _moves_middle(strand: set, half: int):
    """The strand is the middle of the trigon: under-then-over for the first
    ``half`` slides, over-then-under afterwards."""
    def rule(d: Diagram, m: Move, used: int) -> bool:
        first_over = used >= half
        return any(
            a in strand and b in strand and a[1] == first_over and b[1] != first_over
            for a, b in _edge_visits(d, m)
        )
    return rule


def _any_slide(d: Diagram, m: Move, used: int) -> bool:
    return True


class _Descent:
    """Depth-first search for ``budget`` cowrithe-lowering slides obeying a rule."""

    def __init__(self, rule: Callable, budget: int, goal: Callable[[Diagram], bool]):
        self.rule = rule
        self.budget = budget
        self.goal = goal
        self.dead: set = set()
        self.ambiguous: list[int] = []

    def candidates(self, d: Diagram, used: int) -> list[tuple[Move, Diagram]]:
        x = cowrithe(d)
        out = []
        for m in enumerate_moves(d, {MoveKind.RIII}):
            if not self.rule(d, m, used):
                continue
            after = apply_move(d, m)
            if cowrithe(after) == x - 1:
                out.append((m, after))
        return out

    def run(self, d: Diagram) -> list[tuple[Move, Diagram]] | None:
        path: list[tuple[Move, Diagram]] = []
        return path if self._go(d, 0, path) else None

    def _go(self, d: Diagram, used: int, path: list) -> bool:
        if used == self.budget:
            return self.goal(d)
        key = (canonical_form(d), used)
        if key in self.dead:
            return False
        options = self.candidates(d, used)
        if len(options) > 1:
            self.ambiguous.append(used)
        for m, after in options:
            path.append((m, after))
            if self._go(after, used + 1, path):
                return True
            path.pop()
        self.dead.add(key)
        return False


def _strand_visits(word: BraidWord, position: int) -> set[tuple[int, bool]]:
    """Visits of the strand entering the braid at ``position`` (1-based),
    followed from the top of the word to the bottom."""
    pos = position - 1
    out = set()
    for j, x in enumerate(word.letters):
        i = abs(x) - 1
        if pos == i:
            out.add((j, x < 0))
            pos = i + 1
        elif pos == i + 1:
            out.add((j, x > 0))
            pos = i
    return out


def gamma_zero(n: int) -> set[int]:
    """Crossing labels (word positions) of gamma_0 in closure of (b_1...b_n)^n."""
    return {j * n + (n - 1 - j) for j in range(n)}


def _has_monogon(d: Diagram) -> bool:
    return bool(enumerate_moves(d, {MoveKind.RI_DELETE}))


def deform_sequence(n: int) -> MoveTrace:
    """Move trace from D(n+1, n) to D(n, n+1) with (n-1)n(2n-1)/6 RIII moves
    and one RI move."""
    if n < 2:
        raise BadParams(f"n must be >= 2, got {n}")
    raw_start = torus_diagram(n + 1, n)
    start, relabel = normalize_labels(raw_start)
    target = torus_diagram(n, n + 1)
    target_code = canonical_form(target)
    counts = dict(phase_counts(n))

    steps: list[TraceStep] = []
    ambiguous: list[int] = []
    fallback: list[int] = []

    def record(phase: str, path, descent: _Descent | None = None, flagged: bool = False):
        base = len(steps)
        for m, after in path:
            steps.append(TraceStep(m, canonical_form(after).code, phase))
        if descent is not None:
            ambiguous.extend(base + u for u in descent.ambiguous if u < len(path))
        if flagged:
            fallback.extend(range(base, len(steps)))
        return path[-1][1] if path else None

    def descend(phase: str, d: Diagram, rule, budget: int, goal) -> Diagram:
        descent = _Descent(rule, budget, goal)
        path = descent.run(d)
        if path is not None:
            return record(phase, path, descent) or d
        rescue = _Descent(_any_slide, budget, goal)
        path = rescue.run(d)
        if path is None:
            raise InternalScheduleError(f"phase {phase} of the n={n} deformation cannot be realized")
        return record(phase, path, rescue, flagged=True) or d

    # Phase A
    gamma = {relabel[c] for c in gamma_zero(n)}
    d = descend("A", start, _slides_gamma(gamma), counts["A"], _has_monogon)

    # Phase B
    kinks = enumerate_moves(d, {MoveKind.RI_DELETE})
    if not kinks:
        raise InternalScheduleError("no monogon after phase A")
    d = apply_move(d, kinks[0])
    steps.append(TraceStep(kinks[0], canonical_form(d).code, "B"))

    # Phase C
    if n >= 3:
        letters = tuple(range(1, n)) * n + tuple(range(n - 1, 0, -1))
        model_word = BraidWord(n, letters)
        model = closure(model_word)
        align = isomorphism(model, d)
        if align is None:
            raise InternalScheduleError("phase B did not produce the expected closed n-braid")
        for k in range(1, n - 1):
            strand = {(align[c], o) for c, o in _strand_visits(model_word, n - k)}
            budget = counts[f"C{k}"]
            last = k == n - 2
            goal = (lambda x: canonical_form(x) == target_code) if last else (lambda x: True)
            d = descend(f"C{k}", d, _moves_middle(strand, budget // 2), budget, goal)

    if canonical_form(d) != target_code:
        raise InternalScheduleError(f"deformation for n={n} ended away from D({n},{n + 1})")
    return MoveTrace(start, steps, target, n, ambiguous, fallback)


# -- verification --------------------------------------------------------


def verify_trace(trace: MoveTrace) -> DeformReport:
    """Replay ``trace`` through the move engine and certify every step.

    Raises IllegalStep, StateMismatch or TargetMismatch at the first failure.
    """
    d = trace.start
    counts = {"R1": 0, "R2": 0, "R3": 0}
    dx, dw = [], []
    xs, ws = [cowrithe(d)], [writhe(d)]
    positive = d.is_positive()
    phases: dict[str, int] = {}
    euler_ok = d.euler_characteristic() == 2
    for i, step in enumerate(trace.steps):
        m = step.move
        try:
            if m.dart is not None and m.face:
                face = d.face_of(m.dart)
                if tuple(sorted(set(face.corners))) != tuple(m.face):
                    raise IllegalMove(f"face {list(m.face)} does not match the addressed face")
            after = apply_move(d, m)
        except (IllegalMove, MalformedCode) as exc:
            raise IllegalStep(f"step {i}: {exc}", i) from exc
        code = canonical_form(after).code
        if code != step.state:
            raise StateMismatch(f"step {i}: recorded state does not match the replay", i)
        euler_ok = euler_ok and after.euler_characteristic() == 2
        counts[m.kind.family] += 1
        if step.phase:
            phases[step.phase] = phases.get(step.phase, 0) + 1
        xs.append(cowrithe(after))
        ws.append(writhe(after))
        dx.append(xs[-1] - xs[-2])
        dw.append(ws[-1] - ws[-2])
        positive = positive and after.is_positive()
        d = after
    if not is_isomorphic(d, trace.target):
        raise TargetMismatch("final state is not isomorphic to the declared target", len(trace.steps))
    return DeformReport(
        trace.n, counts["R3"], counts["R1"], counts["R2"], dx, dw, positive, True,
        xs, ws, phases, euler_ok,
    )


def torus_pair(n: int) -> tuple[Diagram, Diagram]:
    return torus_diagram(n + 1, n), torus_diagram(n, n + 1)


__all__ = [
    "DeformReport", "MoveTrace", "TraceStep", "deform_sequence", "gamma_zero",
    "phase_counts", "predicted_move_count", "torus_braid", "torus_pair", "verify_trace",
]
