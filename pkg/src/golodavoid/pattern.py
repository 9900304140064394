"""Patterns over a variable alphabet, Parikh vectors and balanced factors.

A pattern is a non-empty word whose letters are *variables*.  Variables are
kept in order of first appearance, so occurrence vectors are reproducible.

The balanced-factor search is a pigeonhole argument on prefix Parikh vectors
reduced mod ``m``: a word over ``k`` letters of length at least ``m**k`` has
two prefixes with the same reduced vector, and the factor between them has
every letter count divisible by ``m``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Optional, Sequence

from .errors import BadSymbol, EmptyPattern, InvalidArgument, OutOfRange

# x, y, z, w first, then the rest of the lowercase letters, then uppercase.
CANONICAL_LETTERS = "xyzw" + "".join(
    c for c in string.ascii_lowercase if c not in "xyzw"
) + string.ascii_uppercase


@dataclass(frozen=True)
class Pattern:
    """A non-empty word over variables.

    ``symbols`` may hold any hashable identifiers; :func:`parse_pattern`
    produces single-letter variables and :func:`zimin` produces ``x1, x2, ...``.
    """

    symbols: tuple

    def __post_init__(self):
        if not isinstance(self.symbols, tuple):
            object.__setattr__(self, "symbols", tuple(self.symbols))
        if not self.symbols:
            raise EmptyPattern()

    @cached_property
    def variables(self) -> tuple:
        return tuple(dict.fromkeys(self.symbols))

    @cached_property
    def occurrences(self) -> dict:
        counts = dict.fromkeys(self.variables, 0)
        for s in self.symbols:
            counts[s] += 1
        return counts

    @property
    def occurrence_vector(self) -> tuple[int, ...]:
        return tuple(self.occurrences[v] for v in self.variables)

    @property
    def k(self) -> int:
        return len(self.variables)

    def __len__(self):
        return len(self.symbols)

    def __iter__(self):
        return iter(self.symbols)

    @property
    def text(self) -> str:
        """The pattern as written, or its canonical rendering when the
        variables are not single letters."""
        if all(isinstance(s, str) and len(s) == 1 and s.isascii() and s.isalpha()
               for s in self.symbols):
            return "".join(self.symbols)
        return render(self)

    def canonical(self) -> "Pattern":
        """Rename variables to ``x, y, z, w, a, ...`` by first occurrence."""
        return parse_pattern(render(self))

    def __str__(self):
        return self.text


def parse_pattern(text: str) -> Pattern:
    if not text:
        raise EmptyPattern()
    for i, c in enumerate(text):
        if not (c.isascii() and c.isalpha()):
            raise BadSymbol(i, c)
    return Pattern(tuple(text))


def render(p: Pattern) -> str:
    """Canonical text form: variables renamed in first-occurrence order."""
    if p.k > len(CANONICAL_LETTERS):
        raise InvalidArgument(f"cannot render a pattern with {p.k} variables")
    names = dict(zip(p.variables, CANONICAL_LETTERS))
    return "".join(names[s] for s in p.symbols)


def zimin(k: int) -> Pattern:
    """The Zimin pattern Z_k, with Z_1 = x1 and Z_k = Z_{k-1} xk Z_{k-1}."""
    if k < 1:
        raise InvalidArgument(f"Zimin index must be >= 1, got {k}")
    word: list[str] = []
    for i in range(1, k + 1):
        word = word + [f"x{i}"] + word
    return Pattern(tuple(word))


def min_occurrence(p: Pattern) -> int:
    return min(p.occurrences.values())


def is_doubled(p: Pattern) -> bool:
    return min_occurrence(p) >= 2


@dataclass(frozen=True)
class ParikhVector:
    """Per-letter counts in a declared letter order, optionally reduced mod m."""

    counts: tuple[int, ...]
    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None:
            if self.modulus < 2:
                raise InvalidArgument("modulus must be >= 2")
            if any(not 0 <= c < self.modulus for c in self.counts):
                raise InvalidArgument("reduced Parikh entries must lie in [0, m)")
        elif any(c < 0 for c in self.counts):
            raise InvalidArgument("Parikh counts must be non-negative")

    def __sub__(self, other: "ParikhVector") -> "ParikhVector":
        if self.modulus != other.modulus or len(self.counts) != len(other.counts):
            raise InvalidArgument("incompatible Parikh vectors")
        if self.modulus is None:
            return ParikhVector(tuple(a - b for a, b in zip(self.counts, other.counts)))
        m = self.modulus
        return ParikhVector(tuple((a - b) % m for a, b in zip(self.counts, other.counts)), m)

    def is_zero(self) -> bool:
        return not any(self.counts)


def parikh_vector(word: Sequence[Hashable], alphabet: Sequence[Hashable],
                  modulus: Optional[int] = None) -> ParikhVector:
    index = {a: i for i, a in enumerate(alphabet)}
    counts = [0] * len(alphabet)
    for s in word:
        try:
            counts[index[s]] += 1
        except KeyError:
            raise InvalidArgument(f"letter {s!r} is not in the declared alphabet") from None
    if modulus is not None:
        counts = [c % modulus for c in counts]
    return ParikhVector(tuple(counts), modulus)


def _alphabet_of(word, alphabet):
    if alphabet is None:
        return tuple(dict.fromkeys(word))
    return tuple(alphabet)


def parikh_prefixes(word: Sequence[Hashable], m: int,
                    alphabet: Optional[Sequence[Hashable]] = None) -> list[ParikhVector]:
    """Mod-``m`` Parikh vectors of all ``len(word) + 1`` prefixes of ``word``.

    When ``alphabet`` is omitted it is taken to be the letters of ``word`` in
    first-occurrence order.
    """
    if m < 2:
        raise InvalidArgument(f"modulus must be >= 2, got {m}")
    alphabet = _alphabet_of(word, alphabet)
    index = {a: i for i, a in enumerate(alphabet)}
    current = [0] * len(alphabet)
    out = [ParikhVector(tuple(current), m)]
    for s in word:
        try:
            i = index[s]
        except KeyError:
            raise InvalidArgument(f"letter {s!r} is not in the declared alphabet") from None
        current[i] = (current[i] + 1) % m
        out.append(ParikhVector(tuple(current), m))
    return out


@dataclass(frozen=True)
class FactorSpan:
    """Half-open span ``[start, end)`` of a non-empty factor."""

    start: int
    end: int

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise OutOfRange(f"invalid factor span ({self.start}, {self.end})")

    def __len__(self):
        return self.end - self.start

    def slice(self, word):
        return word[self.start:self.end]


def balanced_factor(word: Sequence[Hashable], m: int,
                    alphabet: Optional[Sequence[Hashable]] = None) -> Optional[FactorSpan]:
    """Earliest-ending non-empty factor whose letter counts are all divisible by m.

    Scans prefixes left to right and stops at the first prefix whose reduced
    vector was already seen; the earlier prefix is the first one with that
    vector.  Returns ``None`` when all prefix vectors are distinct, which can
    only happen if ``len(word) < m**len(alphabet)``.
    """
    first_seen: dict[ParikhVector, int] = {}
    for j, v in enumerate(parikh_prefixes(word, m, alphabet)):
        i = first_seen.get(v)
        if i is not None:
            return FactorSpan(i, j)
        first_seen[v] = j
    return None


def factor_pattern(p: Pattern, span: FactorSpan) -> Pattern:
    if span.end > len(p):
        raise OutOfRange(f"span ({span.start}, {span.end}) exceeds pattern length {len(p)}")
    return Pattern(p.symbols[span.start:span.end])
