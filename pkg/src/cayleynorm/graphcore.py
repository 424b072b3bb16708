"""Small simple undirected graphs on vertices 1..n.

Everything here is exhaustive and intended for graphs with a handful of
vertices: canonical forms minimise over all n! relabelings, automorphism
groups are enumerated element by element.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .errors import CapacityError, DomainError
from .permcore import Permutation, all_permutations

MAX_AUTOMORPHISM_VERTICES = 64
MAX_CANONICAL_VERTICES = 8
MAX_ENUMERATION_VERTICES = 7


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be non-negative")
        normalized = set()
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise DomainError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise DomainError(f"edge ({i}, {j}) outside 1..{self.n}")
            normalized.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        return cls(n, tuple(edges))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(combinations(range(1, n + 1), 2)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls(n, tuple((i, i + 1) for i in range(1, n)) + ((1, n),))

    @classmethod
    def star(cls, n: int) -> Graph:
        """K_{1,n-1} centred at vertex 1."""
        return cls(n, tuple((1, k) for k in range(2, n + 1)))

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        """adjacency[v] is the neighbour set of vertex v (index 0 unused)."""
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for i, j in self.edges:
            nbrs[i].add(j)
            nbrs[j].add(i)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for i, j in self.edges:
            a[i - 1, j - 1] = a[j - 1, i - 1] = True
        a.setflags(write=False)
        return a

    def has_edge(self, i: int, j: int) -> bool:
        return j in self.adjacency[i]

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(self.adjacency[v]) for v in range(1, self.n + 1)]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def relabel(self, perm: Permutation) -> Graph:
        """Image of the graph under vertex map v ↦ perm(v)."""
        if perm.n != self.n:
            raise DomainError("relabeling permutation has the wrong size")
        return Graph(self.n, tuple((perm(i), perm(j)) for i, j in self.edges))

    def is_automorphism(self, perm: Permutation) -> bool:
        if perm.n != self.n:
            return False
        return all(self.has_edge(perm(i), perm(j)) for i, j in self.edges)


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph plus the table mapping line-graph vertex k to edge table[k-1]."""
    table = g.edges
    by_vertex: dict[int, list[int]] = {}
    for k, (i, j) in enumerate(table, start=1):
        by_vertex.setdefault(i, []).append(k)
        by_vertex.setdefault(j, []).append(k)
    edges = set()
    for star in by_vertex.values():
        edges.update(combinations(star, 2))
    return Graph(len(table), tuple(edges)), table


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in comp:
                    comp.add(w)
                    queue.append(w)
        seen |= comp
        out.append(tuple(sorted(comp)))
    return out


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = float("inf")
    for root in range(1, g.n + 1):
        dist = {root: 0}
        parent = {root: 0}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``vertices``; new vertex k corresponds to ``table[k-1]``."""
    table = tuple(sorted(set(vertices)))
    for v in table:
        if not 1 <= v <= g.n:
            raise DomainError(f"vertex {v} outside 1..{g.n}")
    index = {v: k for k, v in enumerate(table, start=1)}
    edges = tuple((index[i], index[j]) for i, j in g.edges if i in index and j in index)
    return Graph(len(table), edges), table


def _refined_degree_classes(g: Graph) -> list[tuple]:
    """A cheap isomorphism-invariant vertex colouring (degree, sorted neighbour degrees)."""
    deg = [0] + g.degrees()
    return [None] + [
        (deg[v], tuple(sorted(deg[w] for w in g.adjacency[v]))) for v in range(1, g.n + 1)
    ]


def automorphisms(g: Graph) -> tuple[int, list[Permutation]]:
    """All automorphisms of ``g`` by backtracking over vertex images."""
    n = g.n
    if n > MAX_AUTOMORPHISM_VERTICES:
        raise CapacityError(f"automorphism enumeration supports at most {MAX_AUTOMORPHISM_VERTICES} vertices")
    if n == 0:
        return 0, []
    colour = _refined_degree_classes(g)
    adj = g.adjacency

    # Visit vertices so that each one is adjacent to an earlier one when possible.
    order: list[int] = []
    placed: set[int] = set()
    for comp in connected_components(g):
        root = max(comp, key=lambda v: (len(adj[v]), -v))
        queue = deque([root])
        placed.add(root)
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adj[v]):
                if w not in placed:
                    placed.add(w)
                    queue.append(w)

    by_colour: dict[tuple, list[int]] = {}
    for v in range(1, n + 1):
        by_colour.setdefault(colour[v], []).append(v)

    image = [0] * (n + 1)
    used = [False] * (n + 1)
    found: list[Permutation] = []

    def extend(depth: int) -> None:
        if depth == n:
            found.append(Permutation(tuple(image[1:])))
            return
        v = order[depth]
        earlier = order[:depth]
        assigned_nbr = next((u for u in earlier if u in adj[v]), None)
        pool = adj[image[assigned_nbr]] if assigned_nbr is not None else by_colour[colour[v]]
        for w in sorted(pool):
            if used[w] or colour[w] != colour[v]:
                continue
            if any((u in adj[v]) != (image[u] in adj[w]) for u in earlier):
                continue
            image[v] = w
            used[w] = True
            extend(depth + 1)
            used[w] = False
        image[v] = 0

    extend(0)
    found.sort(key=lambda p: p.images)
    return len(found), found


def canonical_form(g: Graph) -> str:
    """Lexicographically least upper-triangular adjacency string over all relabelings."""
    n = g.n
    if n > MAX_CANONICAL_VERTICES:
        raise CapacityError(f"canonical form supports at most {MAX_CANONICAL_VERTICES} vertices")
    m = n * (n - 1) // 2
    if m == 0:
        return ""
    perms = all_permutations(n).astype(np.intp)
    iu, ju = np.triu_indices(n, k=1)
    bits = g.matrix[perms[:, iu], perms[:, ju]]
    weights = 1 << np.arange(m - 1, -1, -1, dtype=np.int64)
    best = int((bits.astype(np.int64) @ weights).min())
    return format(best, f"0{m}b")


def from_canonical_form(n: int, code: str) -> Graph:
    pairs = list(combinations(range(1, n + 1), 2))
    if len(code) != len(pairs):
        raise DomainError(f"canonical string of length {len(code)} does not fit n={n}")
    return Graph(n, tuple(p for p, bit in zip(pairs, code) if bit == "1"))


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, ()),)
    codes = set()
    for rep in _connected_classes(n - 1):
        for mask in range(1, 1 << (n - 1)):
            extra = tuple((v, n) for v in range(1, n) if mask >> (v - 1) & 1)
            codes.add(canonical_form(Graph(n, rep.edges + extra)))
    return tuple(from_canonical_form(n, c) for c in sorted(codes))


def enumerate_connected_classes(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices.

    Representatives are the canonical graphs themselves, ordered by canonical
    string.  Built by attaching a new vertex to every class on n-1 vertices;
    this reaches every class because each connected graph has a vertex whose
    removal keeps it connected.
    """
    if not 2 <= n <= MAX_ENUMERATION_VERTICES:
        if n < 2:
            raise DomainError("enumeration needs n >= 2")
        raise CapacityError(f"enumeration supports n <= {MAX_ENUMERATION_VERTICES}")
    return list(_connected_classes(n))


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(1, g.n + 1)]
    lines += [f"  {i} -- {j};" for i, j in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
