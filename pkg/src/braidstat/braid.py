"""Braid words, the one-generator-per-block family, and closure combinatorics."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .errors import GeneratorOutOfRange, ParseError

_TERM_RE = re.compile(r"^s(\d+)(?:\^(-?\d+))?$")


@dataclass(frozen=True)
class BraidWord:
    """A braid on ``strands`` strands as a signed generator sequence.

    Letter value ``g`` means the generator sigma_|g| with crossing sign
    sign(g); the empty word is the identity braid.
    """

    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 2:
            raise GeneratorOutOfRange("need at least 2 strands")
        for g in self.letters:
            if not 1 <= abs(g) <= self.strands - 1:
                raise GeneratorOutOfRange(
                    f"generator {g} out of range for {self.strands} strands"
                )

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class FamilyTuple:
    """Exponent tuple (k_1, ..., k_{n-1}) for the braid s1^k1 ... s(n-1)^k(n-1)."""

    n: int
    k: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        if len(self.k) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} exponents, got {len(self.k)}")
        if any(ki < 0 for ki in self.k):
            raise ValueError("exponents must be non-negative")

    @classmethod
    def from_exponents(cls, k: Sequence[int]) -> FamilyTuple:
        return cls(len(k) + 1, tuple(k))


def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Parse "s1^3 s2^-2" style words; exponents expand to repeated letters."""
    if strands < 2:
        raise GeneratorOutOfRange("need at least 2 strands")
    letters: list[int] = []
    for token in text.split():
        m = _TERM_RE.match(token)
        if not m:
            raise ParseError(f"malformed token {token!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= strands - 1:
            raise GeneratorOutOfRange(
                f"generator s{idx} out of range for {strands} strands"
            )
        exp = int(m.group(2)) if m.group(2) is not None else 1
        letter = idx if exp >= 0 else -idx
        letters.extend([letter] * abs(exp))
    return BraidWord(strands, tuple(letters))


def family_word(t: FamilyTuple) -> BraidWord:
    letters: list[int] = []
    for i, ki in enumerate(t.k, start=1):
        letters.extend([i] * ki)
    return BraidWord(t.n, tuple(letters))


def family_word_length(t: FamilyTuple) -> int:
    """Word norm of the family braid; equals the plain exponent sum."""
    return sum(t.k)


def underlying_permutation(b: BraidWord) -> tuple[int, ...]:
    """Permutation of {1..n} induced by the braid (signs are irrelevant).

    Returned as a tuple ``perm`` with ``perm[i-1]`` the image of strand ``i``.
    """
    perm = list(range(1, b.strands + 1))
    for g in b.letters:
        a = abs(g)
        perm[a - 1], perm[a] = perm[a], perm[a - 1]
    return tuple(perm)


def closure_component_count(b: BraidWord) -> int:
    """Number of components of the closed braid = cycles of the permutation."""
    perm = underlying_permutation(b)
    seen = [False] * b.strands
    cycles = 0
    for start in range(b.strands):
        if seen[start]:
            continue
        cycles += 1
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i] - 1
    return cycles
