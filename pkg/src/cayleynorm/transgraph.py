"""Transposition sets and their transposition graphs.

A set T of transpositions of {1..n} is the same data as a graph G(T) on
{1..n}; T generates S_n exactly when G(T) is connected.  This module also
moves automorphisms back and forth between G and its line graph.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .errors import ContractViolation, DomainError, NotLiftable, PreconditionError
from .graphcore import Graph, canonical_form, connected_components, girth, line_graph
from .permcore import Permutation, Transposition


@dataclass(frozen=True)
class TranspositionSet:
    n: int
    members: tuple[Transposition, ...]

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise DomainError("a transposition set must be non-empty")
        if len(set(members)) != len(members):
            raise DomainError("duplicate transpositions")
        for t in members:
            if t.hi > self.n:
                raise DomainError(f"transposition {t} does not act on 1..{self.n}")
        object.__setattr__(self, "members", tuple(sorted(members)))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> TranspositionSet:
        return cls(n, tuple(Transposition.of(i, j) for i, j in pairs))

    @classmethod
    def from_graph(cls, g: Graph) -> TranspositionSet:
        return cls.from_pairs(g.n, g.edges)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, t) -> bool:
        return t in self.members

    def pairs(self) -> list[tuple[int, int]]:
        return [t.pair() for t in self.members]


class Kind(str, enum.Enum):
    TREE = "Tree"
    FOUR_CYCLE = "FourCycle"
    COMPLETE_GRAPH = "CompleteGraph"
    GIRTH_AT_LEAST_5 = "GirthAtLeast5"
    OTHER = "Other"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    connected: bool


def graph_of(t: TranspositionSet) -> Graph:
    return Graph(t.n, tuple(t.pairs()))


def generates_sn(t: TranspositionSet) -> bool:
    return graph_of(t).is_connected()


_C4_FORM = canonical_form(Graph.cycle(4))


def classify(t: TranspositionSet) -> Classification:
    g = graph_of(t)
    if not g.is_connected():
        raise PreconditionError("transposition set does not generate S_n")
    n, m = g.n, g.num_edges
    if m == n - 1:
        kind = Kind.TREE
    elif n == 4 and canonical_form(g) == _C4_FORM:
        kind = Kind.FOUR_CYCLE
    elif m == n * (n - 1) // 2:
        kind = Kind.COMPLETE_GRAPH
    elif girth(g) >= 5:
        kind = Kind.GIRTH_AT_LEAST_5
    else:
        kind = Kind.OTHER
    return Classification(kind=kind, connected=True)


def edges_share_short_cycle(t: TranspositionSet, e1: Transposition, e2: Transposition) -> bool:
    """Whether two adjacent edges of G(T) lie on a common cycle of length 3 or 4."""
    if e1 not in t or e2 not in t:
        raise PreconditionError("both edges must belong to the transposition set")
    shared = {e1.lo, e1.hi} & {e2.lo, e2.hi}
    if e1 == e2 or len(shared) != 1:
        raise PreconditionError("edges must be distinct and share exactly one endpoint")
    (i,) = shared
    j = e1.lo + e1.hi - i
    k = e2.lo + e2.hi - i
    g = graph_of(t)
    if g.has_edge(j, k):
        return True
    return any(l not in (i, j, k) for l in g.neighbors(j) & g.neighbors(k))


def induce_line_automorphism(g: Graph, phi: Permutation) -> Permutation:
    """The line-graph permutation {i, j} ↦ {phi(i), phi(j)}, on edge indices 1..|E|."""
    if not g.is_automorphism(phi):
        raise ContractViolation(f"{phi} is not an automorphism of the graph")
    _, table = line_graph(g)
    index = {e: k for k, e in enumerate(table, start=1)}
    images = []
    for i, j in table:
        a, b = phi(i), phi(j)
        images.append(index[(min(a, b), max(a, b))])
    return Permutation(tuple(images))


def lift_line_automorphism(g: Graph, psi: Permutation) -> Permutation:
    """Recover the graph automorphism inducing the line-graph automorphism ``psi``.

    Each vertex of degree at least two is sent to the unique common endpoint
    of the images of its incident edges; a leaf is sent to the far endpoint of
    its edge's image.
    """
    lg, table = line_graph(g)
    if psi.n != lg.n:
        raise NotLiftable("permutation size does not match the line graph")
    if g.n < 5 or not g.is_connected():
        raise PreconditionError("lifting is only supported for connected graphs on >= 5 vertices")
    if not lg.is_automorphism(psi):
        raise NotLiftable(f"{psi} is not a line-graph automorphism")

    incident: dict[int, list[int]] = {v: [] for v in range(1, g.n + 1)}
    for k, (i, j) in enumerate(table, start=1):
        incident[i].append(k)
        incident[j].append(k)

    image = [0] * (g.n + 1)
    for v in range(1, g.n + 1):
        if len(incident[v]) >= 2:
            common = set.intersection(*(set(table[psi(k) - 1]) for k in incident[v]))
            if len(common) != 1:
                raise NotLiftable(f"image of the edge star at vertex {v} has no unique centre")
            image[v] = common.pop()
    for v in range(1, g.n + 1):
        if len(incident[v]) == 1:
            (k,) = incident[v]
            (other,) = set(table[k - 1]) - {v}
            a, b = table[psi(k) - 1]
            target = image[other]
            if target not in (a, b):
                raise NotLiftable(f"leaf {v} has no consistent image")
            image[v] = b if target == a else a
        elif not incident[v]:
            raise NotLiftable(f"isolated vertex {v}")

    try:
        phi = Permutation(tuple(image[1:]))
    except DomainError as exc:
        raise NotLiftable(str(exc)) from exc
    if not g.is_automorphism(phi) or induce_line_automorphism(g, phi) != psi:
        raise NotLiftable("lifted map does not induce the given line-graph automorphism")
    return phi


def is_whitney_regular(g: Graph) -> bool:
    """The connected, at-least-five-vertex regime in which lifting always succeeds."""
    return g.n >= 5 and len(connected_components(g)) == 1
