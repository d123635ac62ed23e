"""Braid words and their closures.

Letters are signed integers: ``i`` stands for ``b_i = sigma_i^{-1}`` (the
strand in position ``i + 1`` passes over the one in position ``i``) and ``-i``
for its inverse ``sigma_i``.  With the closure oriented downward every ``b_i``
crossing is positive, so torus braids close up to positive diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable

from .diagram import Diagram
from .errors import BadParams, MalformedCode, MultiComponent, NotCoprime


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise BadParams("a braid needs at least two strands")
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise MalformedCode(f"letter {x} is not a generator of B_{self.strands}")

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        letters = tuple(int(tok) for tok in text.replace(",", " ").split())
        if strands is None:
            strands = max((abs(x) for x in letters), default=1) + 1
        return cls(strands, letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters)

    def rotated(self, k: int) -> "BraidWord":
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def permutation(self) -> tuple[int, ...]:
        """perm[top position] = bottom position (0-based)."""
        where = list(range(self.strands))   # where[strand] = current position
        at = list(range(self.strands))      # at[position] = strand
        for x in self.letters:
            i = abs(x) - 1
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            where[a], where[b] = i + 1, i
        return tuple(where)

    def components(self) -> int:
        perm = self.permutation()
        seen, count = set(), 0
        for s in range(self.strands):
            if s in seen:
                continue
            count += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
        return count


def torus_braid(p: int, q: int) -> BraidWord:
    """The word (b_1 b_2 ... b_{p-1})^q."""
    if p < 2 or q < 2:
        raise BadParams(f"torus parameters must be >= 2, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}; D({p},{q}) would be a link")
    return BraidWord(p, tuple(range(1, p)) * q)


def closure(w: BraidWord | Iterable[int], strands: int | None = None) -> Diagram:
    """Closed-braid diagram; crossing ``j`` is the ``j``-th letter of ``w``.

    The traversal starts at the top of position 1 and runs downward.
    """
    if not isinstance(w, BraidWord):
        letters = tuple(w)
        w = BraidWord(strands or max((abs(x) for x in letters), default=1) + 1, letters)
    if w.components() != 1:
        raise MultiComponent(f"closure of the {w.strands}-braid '{w}' has {w.components()} components")
    code = []
    pos = 0
    for _ in range(w.strands):
        for j, x in enumerate(w.letters):
            i = abs(x) - 1
            if pos == i:
                code.append((j, x < 0))
                pos = i + 1
            elif pos == i + 1:
                code.append((j, x > 0))
                pos = i
        if pos == 0:
            break
    return Diagram.build(code, {j: (1 if x > 0 else -1) for j, x in enumerate(w.letters)})


def torus_diagram(p: int, q: int) -> Diagram:
    """D(p, q): closure of the p-braid (b_1 ... b_{p-1})^q."""
    return closure(torus_braid(p, q))


def first_occurrence(w: BraidWord, generator: int) -> int:
    """Crossing label of the first letter ``generator`` in ``w``."""
    return w.letters.index(generator)
