"""Automorphism groups of Cayley graphs of S_n and normality decisions.

R(S_n) acts regularly on the vertices, so |Aut(Γ)| = n! · |Stab(id)| and
only the stabilizer of the identity vertex has to be searched.  The search
first fixes the images of the neighbours of id (a bijection of T that must
preserve which generators commute, since commuting pairs are exactly the
pairs with a unique 4-cycle through id), then extends by individualisation
and colour refinement run in lock-step on a source and a target colouring.
Every leaf is checked edge by edge before it is accepted.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .cayley import (
    CayleyGraph,
    generator_translations,
    invert_vertex_map,
    is_right_translation,
    left_translation,
    right_translation,
)
from .errors import CapacityError, PreconditionError
from .graphcore import automorphisms
from .permcore import Permutation
from .transgraph import graph_of

MAX_SEARCH_N = 7


class Method(str, enum.Enum):
    FIX_NEIGHBORHOOD = "fix-neighborhood"
    CONJUGATION = "conjugation"
    BOTH = "both"


@dataclass
class AutSummary:
    stab_order: int
    aut_order: int
    stab_elements: list[np.ndarray] = field(repr=False)
    criterion: Method | None = None


@dataclass
class NormalityVerdict:
    is_normal: bool
    witness: np.ndarray | None
    expected_normal_order: int
    actual_order: int
    method: Method = Method.CONJUGATION


# -- colour refinement --------------------------------------------------------

_SHIFT = np.uint64(40)
_DROP = np.uint64(24)


class _PairRefiner:
    """Refines a source and a target colouring of the same graph in lock-step.

    A colour's new value is (old colour, hashed multiset of neighbour
    colours).  Both sides are renumbered through one shared table, so equal
    colours mean equal signatures; any difference in class sizes proves that
    no automorphism maps the source colouring onto the target one.  Hash
    collisions can only merge classes, which costs pruning but never
    correctness because leaves are verified directly.
    """

    def __init__(self, nbr: np.ndarray):
        self.nbr = nbr
        self.size = nbr.shape[0]
        rng = np.random.default_rng(20240917)
        self.salt = rng.integers(1, 2**62, size=2 * self.size + 2, dtype=np.uint64)

    def refine(self, cs: np.ndarray, ct: np.ndarray):
        V = self.size
        classes = len(np.unique(cs))
        while True:
            hs = self.salt[cs][self.nbr].sum(axis=1, dtype=np.uint64)
            ht = self.salt[ct][self.nbr].sum(axis=1, dtype=np.uint64)
            ks = (cs.astype(np.uint64) << _SHIFT) | (hs >> _DROP)
            kt = (ct.astype(np.uint64) << _SHIFT) | (ht >> _DROP)
            uniq, inv = np.unique(np.concatenate([ks, kt]), return_inverse=True)
            ns, nt = inv[:V], inv[V:]
            counts = np.bincount(ns, minlength=len(uniq))
            if not np.array_equal(counts, np.bincount(nt, minlength=len(uniq))):
                return None
            new_classes = int(np.count_nonzero(counts))
            cs, ct = ns, nt
            if new_classes == classes:
                return cs, ct
            classes = new_classes


def _commuting_matrix(g: CayleyGraph) -> np.ndarray:
    gens = g.generators
    d = len(gens)
    comm = np.zeros((d, d), dtype=bool)
    for i in range(d):
        for j in range(d):
            comm[i, j] = i != j and not gens[i].meets(gens[j])
    return comm


def commuting_preserving_bijections(g: CayleyGraph) -> Iterator[tuple[int, ...]]:
    """Bijections of generator indices preserving the commuting relation, in lex order."""
    comm = _commuting_matrix(g)
    d = comm.shape[0]
    image: list[int] = []
    used = [False] * d

    def extend():
        i = len(image)
        if i == d:
            yield tuple(image)
            return
        for j in range(d):
            if used[j]:
                continue
            if any(comm[i, k] != comm[j, image[k]] for k in range(i)):
                continue
            used[j] = True
            image.append(j)
            yield from extend()
            image.pop()
            used[j] = False

    yield from extend()


def _search_stabilizer(g: CayleyGraph, local_maps) -> list[np.ndarray]:
    if g.n > MAX_SEARCH_N:
        raise CapacityError(f"stabilizer search supports n <= {MAX_SEARCH_N}")
    V, nbr = g.order, g.nbr
    refiner = _PairRefiner(nbr)
    root = g.identity
    found: list[np.ndarray] = []

    def descend(cs, ct):
        refined = refiner.refine(cs, ct)
        if refined is None:
            return
        cs, ct = refined
        counts = np.bincount(cs)
        if counts.max() == 1:
            pos = np.empty(V, dtype=np.int64)
            pos[ct] = np.arange(V)
            pi = pos[cs]
            if g.is_automorphism(pi):
                found.append(pi)
            return
        sizes = np.where(counts > 1, counts, V + 1)
        cell = int(np.argmin(sizes))
        x = int(np.flatnonzero(cs == cell)[0])
        fresh = int(max(cs.max(), ct.max())) + 1
        for y in np.flatnonzero(ct == cell):
            cs2, ct2 = cs.copy(), ct.copy()
            cs2[x] = fresh
            ct2[y] = fresh
            descend(cs2, ct2)

    base = np.zeros(V, dtype=np.int64)
    base[root] = 1
    start = nbr[root]
    for f in local_maps:
        cs, ct = base.copy(), base.copy()
        for i, j in enumerate(f):
            cs[start[i]] = 2 + i
            ct[start[j]] = 2 + i
        descend(cs, ct)
    return found


def stabilizer_of_identity(g: CayleyGraph) -> list[np.ndarray]:
    """Every automorphism of Γ fixing the identity vertex."""
    return _search_stabilizer(g, commuting_preserving_bijections(g))


def fix_neighborhood_stabilizer(g: CayleyGraph) -> list[np.ndarray]:
    """Automorphisms fixing id and each of its neighbours."""
    return _search_stabilizer(g, [tuple(range(g.degree))])


def aut_order(g: CayleyGraph) -> AutSummary:
    stab = stabilizer_of_identity(g)
    return AutSummary(stab_order=len(stab), aut_order=math.factorial(g.n) * len(stab), stab_elements=stab)


def expected_normal_order(g: CayleyGraph) -> int:
    order, _ = automorphisms(graph_of(g.t))
    return math.factorial(g.n) * order


def is_normal(g: CayleyGraph, method: Method = Method.CONJUGATION, summary: AutSummary | None = None) -> NormalityVerdict:
    method = Method(method)
    if method is Method.BOTH:
        raise PreconditionError("is_normal evaluates one criterion at a time")
    if method is Method.FIX_NEIGHBORHOOD and g.n < 5:
        raise PreconditionError("the fixed-neighbourhood criterion needs n >= 5")
    if summary is None:
        summary = aut_order(g)
    expected = expected_normal_order(g)
    witness = None
    if method is Method.FIX_NEIGHBORHOOD:
        identity = np.arange(g.order)
        witness = next((p for p in fix_neighborhood_stabilizer(g) if not np.array_equal(p, identity)), None)
    else:
        rhos = generator_translations(g)
        for pi in summary.stab_elements:
            inv = invert_vertex_map(pi)
            if any(is_right_translation(g, pi[rho[inv]]) is None for rho in rhos):
                witness = pi
                break
    return NormalityVerdict(
        is_normal=witness is None,
        witness=witness,
        expected_normal_order=expected,
        actual_order=summary.aut_order,
        method=method,
    )


def normalizes_all_right_translations(g: CayleyGraph, stab: list[np.ndarray]) -> bool:
    """Conjugation test against every ρ_a rather than just the generators."""
    rhos = [right_translation(g, g.vertex(r)) for r in range(g.order)]
    for pi in stab:
        inv = invert_vertex_map(pi)
        if any(is_right_translation(g, pi[rho[inv]]) is None for rho in rhos):
            return False
    return True


def verify_direct_product(g: CayleyGraph, summary: AutSummary | None = None) -> bool:
    """Check Aut(Γ) = R(S_n) × L(Aut(G(T))) through four concrete properties."""
    if g.n < 3:
        raise PreconditionError("direct product check needs n >= 3")
    if summary is None:
        summary = aut_order(g)
    if not is_normal(g, Method.CONJUGATION, summary).is_normal:
        raise PreconditionError("Cayley graph is not normal")
    order, auts = automorphisms(graph_of(g.t))
    rhos = generator_translations(g)
    for phi in auts:
        lam = left_translation(g, phi)
        if not g.is_automorphism(lam):
            return False
        if any(not np.array_equal(lam[rho], rho[lam]) for rho in rhos):
            return False
        if is_right_translation(g, lam) is not None and not phi.is_identity():
            return False
    return math.factorial(g.n) * order == summary.aut_order


def is_closed(elements: list[np.ndarray], pairs: list[tuple[int, int]] | None = None) -> bool:
    """Whether products of the given index pairs (default: all pairs) stay in the set."""
    keys = {e.tobytes() for e in elements}
    if pairs is None:
        pairs = [(i, j) for i in range(len(elements)) for j in range(len(elements))]
    return all(elements[i][elements[j]].tobytes() in keys for i, j in pairs)


def restriction_to_generators(g: CayleyGraph, pi: np.ndarray) -> tuple[int, ...]:
    """The bijection of generator indices that ``pi`` induces on N(id)."""
    start = g.nbr[g.identity]
    where = {int(v): i for i, v in enumerate(start)}
    return tuple(where[int(pi[v])] for v in start)


# -- independent oracle -------------------------------------------------------


def naive_automorphisms(nbr: np.ndarray, limit: int | None = None) -> list[np.ndarray]:
    """All automorphisms of a regular graph by plain backtracking on vertex images.

    No use is made of vertex-transitivity or refinement: vertices are visited
    in BFS order and each candidate image is checked against every
    previously assigned vertex.  Meant as a cross-check on small graphs.
    """
    V = nbr.shape[0]
    adj = [frozenset(row) for row in nbr.tolist()]
    order, parent = [0], {0: None}
    for v in order:
        for w in sorted(adj[v]):
            if w not in parent:
                parent[w] = v
                order.append(w)
    if len(order) != V:
        raise PreconditionError("naive search expects a connected graph")
    position = {v: k for k, v in enumerate(order)}
    earlier_nbrs = [[w for w in adj[v] if position[w] < position[v]] for v in range(V)]

    image = [-1] * V
    used = [False] * V
    found: list[np.ndarray] = []

    def extend(k: int) -> bool:
        if k == V:
            found.append(np.array(image, dtype=np.int64))
            return limit is not None and len(found) >= limit
        v = order[k]
        pool = range(V) if parent[v] is None else adj[image[parent[v]]]
        back = earlier_nbrs[v]
        for w in sorted(pool):
            if used[w]:
                continue
            if any(image[u] not in adj[w] for u in back):
                continue
            # w may not touch the image of an assigned non-neighbour of v
            if sum(1 for x in adj[w] if used[x]) != len(back):
                continue
            image[v] = w
            used[w] = True
            stop = extend(k + 1)
            used[w] = False
            image[v] = -1
            if stop:
                return True
        return False

    extend(0)
    return found
