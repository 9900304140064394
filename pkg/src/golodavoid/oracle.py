"""Brute-force ground truth: instance matching and exhaustive word counts.

Two matchers live here.  :func:`is_instance` is a plain backtracking search
over image lengths that returns a witness assignment.  :class:`Matcher`
compiles the same search into a regular expression with back-references
(lazy groups explore image lengths in the same order), which is what the
exhaustive counters use for speed.  The test suite checks that the two agree.
"""

from __future__ import annotations

import itertools
import os
import re
import string
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .errors import BudgetExceeded, InvalidArgument
from .pattern import Pattern

DEFAULT_BUDGET = 10 ** 8
LETTERS = string.ascii_lowercase + string.ascii_uppercase + string.digits


def default_budget() -> int:
    env = os.environ.get("GOLOD_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def alphabet(m: int) -> str:
    if not 1 <= m <= len(LETTERS):
        raise InvalidArgument(f"alphabet size must be in [1, {len(LETTERS)}], got {m}")
    return LETTERS[:m]


@dataclass(frozen=True)
class Assignment:
    """Non-erasing morphism: each variable maps to a non-empty word."""

    images: dict

    def __post_init__(self):
        if any(len(w) == 0 for w in self.images.values()):
            raise InvalidArgument("images of a non-erasing morphism must be non-empty")

    def apply(self, p: Pattern):
        parts = [self.images[s] for s in p.symbols]
        if all(isinstance(x, str) for x in parts):
            return "".join(parts)
        return tuple(itertools.chain.from_iterable(parts))


def is_instance(word: Sequence, p: Pattern) -> Optional[Assignment]:
    """Witness ``h`` with ``h(p) == word``, or ``None``.

    Image lengths are tried in increasing lexicographic order, variables taken
    in first-occurrence order, so the witness is deterministic.
    """
    n = len(word)
    if n < len(p):
        return None
    symbols = p.symbols
    images: dict = {}

    def needed(i: int) -> int:
        # fewest letters that symbols[i:] can consume under the current bindings
        return sum(len(images[t]) if t in images else 1 for t in symbols[i:])

    def search(i: int, pos: int) -> bool:
        if i == len(symbols):
            return pos == n
        s = symbols[i]
        if s in images:
            img = images[s]
            end = pos + len(img)
            return word[pos:end] == img and search(i + 1, end)
        length = 1
        while True:
            images[s] = word[pos:pos + length]
            if pos + needed(i) > n:
                break
            if search(i + 1, pos + length):
                return True
            length += 1
        del images[s]
        return False

    if search(0, 0):
        return Assignment(dict(images))
    return None


def pattern_regex(p: Pattern) -> str:
    groups: dict = {}
    parts = []
    for s in p.symbols:
        if s in groups:
            parts.append(f"(?P={groups[s]})")
        else:
            groups[s] = f"v{len(groups)}"
            parts.append(f"(?P<{groups[s]}>.+?)")
    return "".join(parts)


class Matcher:
    """Compiled instance tests for one pattern over string words."""

    def __init__(self, p: Pattern):
        self.pattern = p
        body = pattern_regex(p)
        self._full = re.compile(body, re.DOTALL)
        self._suffix = re.compile(f"(?:{body})\\Z", re.DOTALL)
        self._names = {s: f"v{i}" for i, s in enumerate(p.variables)}

    def instance(self, word: str) -> Optional[Assignment]:
        mo = self._full.fullmatch(word)
        if mo is None:
            return None
        return Assignment({s: mo.group(g) for s, g in self._names.items()})

    def is_instance(self, word: str) -> bool:
        return self._full.fullmatch(word) is not None

    def contains(self, word: str) -> bool:
        return self._full.search(word) is not None

    def suffix_free(self, word: str) -> bool:
        return self._suffix.search(word) is None


@lru_cache(maxsize=256)
def matcher(p: Pattern) -> Matcher:
    return Matcher(p)


def contains_instance(word: str, p: Pattern) -> bool:
    return matcher(p).contains(word)


def extension_safe(word: str, p: Pattern) -> bool:
    """True iff no suffix of ``word`` is an instance of ``p``.

    Given that ``word[:-1]`` avoids ``p``, this is equivalent to ``word``
    avoiding ``p``.
    """
    return matcher(p).suffix_free(word)


@dataclass(frozen=True)
class CountTable:
    """``counts[n]`` = number of length-``n`` words over ``m`` letters avoiding ``pattern``."""

    m: int
    pattern: Pattern
    counts: tuple[int, ...]

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1

    def to_csv(self) -> str:
        return "n,count\n" + "".join(f"{n},{c}\n" for n, c in enumerate(self.counts))


def _count_from(prefix: str, letters: str, p: Pattern, n_max: int, budget: int):
    """Depth-first count of avoiders extending ``prefix``; returns (counts, nodes)."""
    safe = matcher(p).suffix_free
    counts = [0] * (n_max + 1)
    nodes = 0
    stack = [prefix]
    while stack:
        w = stack.pop()
        counts[len(w)] += 1
        if len(w) == n_max:
            continue
        for a in letters:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(budget, "count_avoiders")
            x = w + a
            if safe(x):
                stack.append(x)
    return counts, nodes


def count_avoiders(m: int, p: Pattern, n_max: int, budget: Optional[int] = None,
                   workers: int = 1) -> CountTable:
    """Exact avoider counts for lengths ``0..n_max`` by pruned depth-first search.

    With ``workers > 1`` the search is split by first letter across processes;
    the result is identical to the sequential run.
    """
    if n_max < 0:
        raise InvalidArgument("n_max must be >= 0")
    letters = alphabet(m)
    budget = default_budget() if budget is None else budget
    if n_max == 0:
        return CountTable(m, p, (1,))
    roots = [a for a in letters if extension_safe(a, p)]
    counts = [1] + [0] * n_max
    if workers > 1 and len(roots) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=workers) as ex:
            futures = [ex.submit(_count_from, r, letters, p, n_max, budget) for r in roots]
            parts = [f.result() for f in futures]
        if sum(nodes for _, nodes in parts) > budget:
            raise BudgetExceeded(budget, "count_avoiders")
    else:
        parts = []
        remaining = budget
        for r in roots:
            part, nodes = _count_from(r, letters, p, n_max, remaining)
            remaining -= nodes
            parts.append((part, nodes))
    for part, _ in parts:
        for n in range(1, n_max + 1):
            counts[n] += part[n]
    return CountTable(m, p, tuple(counts))


def count_instances(m: int, p: Pattern, n: int, budget: Optional[int] = None) -> int:
    """Number of length-``n`` words over ``m`` letters that are instances of ``p``.

    Enumerates all ``m**n`` words and tests each one.
    """
    letters = alphabet(m)
    budget = default_budget() if budget is None else budget
    if n < len(p):
        return 0
    if m ** n > budget:
        raise BudgetExceeded(budget, "count_instances")
    test = matcher(p).is_instance
    join = "".join
    return sum(1 for w in itertools.product(letters, repeat=n) if test(join(w)))
