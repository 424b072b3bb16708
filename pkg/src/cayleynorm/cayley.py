"""Explicit Cayley graphs Cay(S_n, T) for transposition sets T.

Vertices are permutations indexed by lexicographic rank.  The graph is a
dense ``(n!, |T|)`` table: ``nbr[r, g]`` is the rank of ``t_g · unrank(r)``.
Vertex permutations (candidate automorphisms) are plain integer arrays of
length n! mapping rank to rank; composing two of them is ``p[q]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, DomainError, PreconditionError, SizeMismatchError
from .permcore import Permutation, Transposition, all_permutations, rank, rank_rows, unrank
from .transgraph import TranspositionSet, generates_sn

MAX_N = 8


@dataclass(frozen=True, eq=False)
class CayleyGraph:
    n: int
    t: TranspositionSet
    perms: np.ndarray = field(repr=False)
    nbr: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.perms.shape[0]

    @property
    def degree(self) -> int:
        return len(self.t)

    @property
    def generators(self) -> tuple[Transposition, ...]:
        return self.t.members

    @property
    def num_edges(self) -> int:
        return self.order * self.degree // 2

    @property
    def identity(self) -> int:
        return 0

    def vertex(self, r: int) -> Permutation:
        return Permutation.from_zero_based(self.perms[r])

    def rank_of(self, p: Permutation) -> int:
        if p.n != self.n:
            raise SizeMismatchError(f"permutation on {p.n} points, graph on {self.n}")
        return rank(p)

    def label(self, r: int) -> str:
        return str(self.vertex(r))

    def parity(self) -> np.ndarray:
        """0/1 parity of every vertex, by counting inversions."""
        p = self.perms
        inv = np.zeros(self.order, dtype=np.int64)
        for i in range(self.n - 1):
            inv += (p[:, i + 1:] < p[:, i:i + 1]).sum(axis=1)
        return inv % 2

    def adjacent(self, u: int, v: int) -> bool:
        return bool((self.nbr[u] == v).any())

    def common_neighbors(self, u: int, v: int) -> set[int]:
        return set(self.nbr[u].tolist()) & set(self.nbr[v].tolist())

    def distances_from(self, root: int = 0) -> np.ndarray:
        dist = np.full(self.order, -1, dtype=np.int64)
        dist[root] = 0
        frontier = np.array([root])
        d = 0
        while frontier.size:
            d += 1
            nxt = np.unique(self.nbr[frontier].ravel())
            nxt = nxt[dist[nxt] < 0]
            dist[nxt] = d
            frontier = nxt
        return dist

    def is_automorphism(self, pi: np.ndarray) -> bool:
        """Whether the vertex map ``pi`` is a bijection preserving adjacency."""
        pi = np.asarray(pi)
        if pi.shape != (self.order,):
            return False
        if not np.array_equal(np.sort(pi), np.arange(self.order)):
            return False
        mapped = np.sort(pi[self.nbr], axis=1)
        target = np.sort(self.nbr[pi], axis=1)
        return bool(np.array_equal(mapped, target))

    def to_dot(self) -> str:
        if self.n > 4:
            raise CapacityError("DOT export of the Cayley graph is limited to n <= 4")
        labels = [self.label(r) for r in range(self.order)]
        lines = ["graph Cayley {"]
        lines += [f'  {r} [label="{labels[r]}"];' for r in range(self.order)]
        for r in range(self.order):
            for g, s in enumerate(self.nbr[r].tolist()):
                if r < s:
                    lines.append(f'  {r} -- {s} [label="{self.generators[g]}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def build(t: TranspositionSet) -> CayleyGraph:
    n = t.n
    if not generates_sn(t):
        raise PreconditionError("transposition set does not generate S_n")
    if n > MAX_N:
        raise CapacityError(f"Cayley graphs are supported up to n = {MAX_N}")
    perms = all_permutations(n)
    cols = []
    for tr in t.members:
        swap = np.arange(n)
        swap[tr.lo - 1], swap[tr.hi - 1] = tr.hi - 1, tr.lo - 1
        # t∘σ relabels the values of σ's image table
        cols.append(rank_rows(swap[perms]))
    nbr = np.stack(cols, axis=1)
    nbr.setflags(write=False)
    return CayleyGraph(n=n, t=t, perms=perms, nbr=nbr)


def neighbors(g: CayleyGraph, v: int) -> list[tuple[int, int]]:
    if not 0 <= v < g.order:
        raise DomainError(f"vertex rank {v} out of range")
    return [(k, int(s)) for k, s in enumerate(g.nbr[v])]


def right_translation(g: CayleyGraph, a: Permutation) -> np.ndarray:
    """ρ_a: σ ↦ σa, as a rank-to-rank array."""
    if a.n != g.n:
        raise SizeMismatchError(f"permutation on {a.n} points, graph on {g.n}")
    return rank_rows(g.perms[:, a.zero_based()])


def left_translation(g: CayleyGraph, f: Permutation) -> np.ndarray:
    """σ ↦ fσ, as a rank-to-rank array."""
    if f.n != g.n:
        raise SizeMismatchError(f"permutation on {f.n} points, graph on {g.n}")
    return rank_rows(f.zero_based()[g.perms])


def is_right_translation(g: CayleyGraph, pi: np.ndarray) -> Permutation | None:
    """The ``a`` with ``pi == ρ_a``, or None when ``pi`` is not a right translation."""
    a = g.vertex(int(pi[g.identity]))
    if np.array_equal(np.asarray(pi), right_translation(g, a)):
        return a
    return None


def generator_translations(g: CayleyGraph) -> list[np.ndarray]:
    return [right_translation(g, tr.as_permutation(g.n)) for tr in g.generators]


def invert_vertex_map(pi: np.ndarray) -> np.ndarray:
    inv = np.empty_like(pi)
    inv[pi] = np.arange(pi.shape[0], dtype=pi.dtype)
    return inv


def expected_vertex_count(n: int) -> int:
    return math.factorial(n)
