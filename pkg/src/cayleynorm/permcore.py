"""Permutations of {1..n}, transpositions, and lexicographic ranking.

Products are read right to left: ``compose(f, g)`` applies ``g`` first and
then ``f``, so ``compose(T(2, 3), T(1, 2))`` is the 3-cycle ``(1 3 2)``.

Labels are 1-based everywhere in the public API.  The vectorised helpers at
the bottom work on 0-based numpy image tables and are what the Cayley graph
code uses to handle all n! elements at once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, SizeMismatchError


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored as its one-line image table."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(x) for x in self.images)
        if not images:
            raise DomainError("a permutation needs n >= 1")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        """Build from disjoint cycles, e.g. ``from_cycles(4, (1, 2, 3))``."""
        images = list(range(1, n + 1))
        seen = set()
        for cycle in cycles:
            for x in cycle:
                if not 1 <= x <= n:
                    raise DomainError(f"element {x} outside 1..{n}")
                if x in seen:
                    raise DomainError(f"element {x} appears in two cycles")
                seen.add(x)
            for a, b in zip(cycle, tuple(cycle[1:]) + tuple(cycle[:1])):
                images[a - 1] = b
        return cls(tuple(images))

    @classmethod
    def from_zero_based(cls, images: Iterable[int]) -> Permutation:
        return cls(tuple(int(x) + 1 for x in images))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def zero_based(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64) - 1

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest element."""
        out, seen = [], set()
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cycle, x = [], start
            while x not in seen:
                seen.add(x)
                cycle.append(x)
                x = self(x)
            out.append(tuple(cycle))
        return out

    def parity(self) -> int:
        """0 for even permutations, 1 for odd ones."""
        return sum(len(c) - 1 for c in self.cycles()) % 2

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


@dataclass(frozen=True, order=True)
class Transposition:
    """The transposition ``(lo hi)``, equivalently the unordered pair {lo, hi}."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (isinstance(self.lo, int) and isinstance(self.hi, int)):
            raise DomainError("transposition endpoints must be integers")
        if self.lo < 1 or self.lo >= self.hi:
            raise DomainError(f"transposition needs 1 <= lo < hi, got ({self.lo}, {self.hi})")

    @classmethod
    def of(cls, i: int, j: int) -> Transposition:
        """Normalising constructor accepting the endpoints in either order."""
        return cls(min(i, j), max(i, j))

    def as_permutation(self, n: int) -> Permutation:
        if self.hi > n:
            raise DomainError(f"transposition {self} does not act on 1..{n}")
        images = list(range(1, n + 1))
        images[self.lo - 1], images[self.hi - 1] = self.hi, self.lo
        return Permutation(tuple(images))

    def pair(self) -> tuple[int, int]:
        return (self.lo, self.hi)

    def meets(self, other: Transposition) -> bool:
        """True when the two pairs share an endpoint."""
        return bool({self.lo, self.hi} & {other.lo, other.hi})

    def __str__(self) -> str:
        return f"({self.lo} {self.hi})"


def compose(f: Permutation, g: Permutation) -> Permutation:
    """Return f∘g, i.e. x ↦ f(g(x))."""
    if f.n != g.n:
        raise SizeMismatchError(f"cannot compose permutations of {f.n} and {g.n} points")
    fi = f.images
    return Permutation(tuple(fi[x - 1] for x in g.images))


def compose_all(*perms: Permutation) -> Permutation:
    """Right-to-left product of several permutations."""
    if not perms:
        raise DomainError("need at least one permutation")
    out = perms[-1]
    for p in reversed(perms[:-1]):
        out = compose(p, out)
    return out


def inverse(f: Permutation) -> Permutation:
    inv = [0] * f.n
    for i, v in enumerate(f.images, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


@lru_cache(maxsize=None)
def _factorials(n: int) -> tuple[int, ...]:
    return tuple(math.factorial(k) for k in range(n + 1))


def rank(f: Permutation) -> int:
    """Position of ``f`` in the lexicographic order of one-line notations."""
    n = f.n
    fact = _factorials(n)
    remaining = list(range(1, n + 1))
    r = 0
    for i, v in enumerate(f.images):
        k = remaining.index(v)
        r += k * fact[n - 1 - i]
        remaining.pop(k)
    return r


def unrank(r: int, n: int) -> Permutation:
    if n < 1:
        raise DomainError("n must be at least 1")
    fact = _factorials(n)
    if not 0 <= r < fact[n]:
        raise DomainError(f"rank {r} out of range 0..{fact[n] - 1}")
    remaining = list(range(1, n + 1))
    images = []
    for i in range(n):
        k, r = divmod(r, fact[n - 1 - i])
        images.append(remaining.pop(k))
    return Permutation(tuple(images))


def all_transpositions(n: int) -> tuple[Transposition, ...]:
    if n < 2:
        raise DomainError("transpositions need n >= 2")
    return tuple(Transposition(i, j) for i, j in combinations(range(1, n + 1), 2))


def commute(a: Permutation, b: Permutation) -> bool:
    return compose(a, b) == compose(b, a)


# -- vectorised helpers (0-based image tables) -------------------------------


@lru_cache(maxsize=8)
def _all_permutations_cached(n: int) -> np.ndarray:
    table = np.array(list(permutations(range(n))), dtype=np.int8).reshape(-1, n)
    table.setflags(write=False)
    return table


def all_permutations(n: int) -> np.ndarray:
    """All n! permutations as 0-based rows, row index equal to rank."""
    if n < 1:
        raise DomainError("n must be at least 1")
    return _all_permutations_cached(n)


def rank_rows(table: np.ndarray) -> np.ndarray:
    """Vectorised ``rank`` for a 2-D array of 0-based one-line rows."""
    table = np.asarray(table)
    n = table.shape[1]
    fact = _factorials(n)
    out = np.zeros(table.shape[0], dtype=np.int64)
    for i in range(n - 1):
        smaller_after = (table[:, i + 1:] < table[:, i:i + 1]).sum(axis=1)
        out += smaller_after * fact[n - 1 - i]
    return out
