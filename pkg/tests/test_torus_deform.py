import dataclasses
import json

import pytest

from torusmoves.braid import torus_diagram
from torusmoves.diagram import is_isomorphic
from torusmoves.errors import BadParams, IllegalStep, MalformedCode, StateMismatch, TargetMismatch
from torusmoves.invariants import move_lower_bounds
from torusmoves.moves import MoveKind
from torusmoves.torus_deform import (
    MoveTrace,
    deform_sequence,
    gamma_zero,
    phase_counts,
    predicted_move_count,
    torus_pair,
    verify_trace,
)

RIII = {2: 1, 3: 5, 4: 14, 5: 30, 6: 55}


@pytest.fixture(scope="module")
def trace4():
    return deform_sequence(4)


def test_predicted_counts():
    for n, k in RIII.items():
        assert predicted_move_count(n) == (k, 1)
        assert sum(c for phase, c in phase_counts(n) if phase != "B") == k


def test_gamma_zero_labels():
    assert gamma_zero(3) == {2, 4, 6}


def test_bad_n():
    with pytest.raises(BadParams):
        deform_sequence(1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_deformation_verifies(n):
    trace = deform_sequence(n)
    report = verify_trace(trace)
    assert report.riii_count == RIII[n]
    assert report.ri_count == 1 and report.rii_count == 0
    assert all(dx == -1 for s, dx in zip(trace.steps, report.cowrithe_deltas)
               if s.move.kind is MoveKind.RIII)
    assert report.positive and report.euler_ok
    assert not trace.fallback_steps
    bounds = move_lower_bounds(*torus_pair(n))
    assert report.riii_count + report.rii_count == bounds.rii_riii_lower
    assert report.ri_count == bounds.ri_lower


def test_trace_is_deterministic(trace4):
    assert deform_sequence(4).dumps() == trace4.dumps()


def test_trace_json_round_trip(trace4):
    again = MoveTrace.from_json(trace4.dumps())
    assert again.dumps() == trace4.dumps()
    assert verify_trace(again).total == len(trace4)
    assert is_isomorphic(again.target, torus_diagram(4, 5))


def test_tampered_face_is_an_illegal_step(trace4):
    steps = list(trace4.steps)
    bad = dataclasses.replace(steps[3].move, face=(999,) + steps[3].move.face[1:])
    steps[3] = dataclasses.replace(steps[3], move=bad)
    with pytest.raises(IllegalStep) as info:
        verify_trace(dataclasses.replace(trace4, steps=steps))
    assert info.value.index == 3


def test_tampered_state_is_a_mismatch(trace4):
    steps = list(trace4.steps)
    steps[5] = dataclasses.replace(steps[5], state=steps[4].state)
    with pytest.raises(StateMismatch) as info:
        verify_trace(dataclasses.replace(trace4, steps=steps))
    assert info.value.index == 5


def test_wrong_target(trace4):
    with pytest.raises(TargetMismatch):
        verify_trace(dataclasses.replace(trace4, target=torus_diagram(5, 4)))


def test_truncated_trace_misses_target(trace4):
    with pytest.raises(TargetMismatch):
        verify_trace(dataclasses.replace(trace4, steps=trace4.steps[:-1]))


def test_step_without_state_is_malformed(trace4):
    data = json.loads(trace4.dumps())
    del data["steps"][0]["state"]
    with pytest.raises(MalformedCode):
        MoveTrace.from_json(data)
