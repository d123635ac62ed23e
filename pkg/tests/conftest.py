import random

from torusmoves.braid import BraidWord, closure
from torusmoves.errors import MultiComponent


def random_closures(count, seed=0, max_crossings=10, max_strands=4):
    """Deterministic sample of single-component closed-braid diagrams."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        strands = rng.randint(2, max_strands)
        length = rng.randint(1, max_crossings)
        letters = tuple(rng.choice((1, -1)) * rng.randint(1, strands - 1) for _ in range(length))
        try:
            out.append(closure(BraidWord(strands, letters)))
        except MultiComponent:
            continue
    return out


def random_relabeling(d, rng):
    labels = list(d.crossings)
    fresh = rng.sample(range(1000), len(labels))
    return d.relabeled(dict(zip(labels, fresh)))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
