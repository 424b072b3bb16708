"""Executable checks of the local structure of Cay(S_n, T).

Each ``verify_*`` function walks a concrete Cayley graph around a base
vertex σ and reports every place where the observed structure (common
neighbours, K_{3,3} subgraphs, alternating 6-cycles) departs from what the
transposition graph predicts.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations, product

from .cayley import CayleyGraph
from .errors import DomainError
from .permcore import Permutation, Transposition, all_transpositions, compose, compose_all
from .transgraph import TranspositionSet, edges_share_short_cycle, graph_of


class Lemma(str, enum.Enum):
    COMMUTE_DISJOINT = "commute_disjoint"
    FOUR_CYCLE = "four_cycle"
    K33 = "k33"
    TUPLES = "tuples"
    SIX_CYCLE = "six_cycle"


@dataclass
class LemmaReport:
    lemma: Lemma
    instances_checked: int = 0
    violations: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: LemmaReport) -> LemmaReport:
        self.instances_checked += other.instances_checked
        self.violations.extend(other.violations)
        for key, value in other.details.items():
            if isinstance(value, int):
                self.details[key] = self.details.get(key, 0) + value
        return self

    def as_dict(self) -> dict:
        return {
            "lemma": self.lemma.value,
            "instances_checked": self.instances_checked,
            "violation_count": len(self.violations),
            "violations": self.violations,
            "passed": self.passed,
            **{k: v for k, v in sorted(self.details.items())},
        }


def _commute(a: Transposition, b: Transposition) -> bool:
    return a == b or not a.meets(b)


def _labels(g: CayleyGraph, ranks) -> list[str]:
    return sorted(g.label(int(r)) for r in ranks)


def verify_commute_disjoint(t: TranspositionSet) -> LemmaReport:
    report = LemmaReport(Lemma.COMMUTE_DISJOINT)
    n = t.n
    for a, b in combinations(t.members, 2):
        report.instances_checked += 1
        pa, pb = a.as_permutation(n), b.as_permutation(n)
        commuting = compose(pa, pb) == compose(pb, pa)
        disjoint = not a.meets(b)
        if commuting != disjoint:
            report.violations.append(
                {"transpositions": [str(a), str(b)], "commute": commuting, "disjoint": disjoint}
            )
    return report


def verify_four_cycle(g: CayleyGraph, sigma: Permutation) -> LemmaReport:
    """Common neighbours of aσ and bσ besides σ, for every pair of generators."""
    report = LemmaReport(Lemma.FOUR_CYCLE, details={"commuting_pairs": 0, "triangle_pairs": 0})
    n, gens = g.n, g.generators
    s = g.rank_of(sigma)
    row = g.nbr[s]
    gt = graph_of(g.t)
    for (i, a), (j, b) in combinations(enumerate(gens), 2):
        report.instances_checked += 1
        found = g.common_neighbors(int(row[i]), int(row[j])) - {s}
        pa, pb = a.as_permutation(n), b.as_permutation(n)
        if not a.meets(b):
            report.details["commuting_pairs"] += 1
            expected = {g.rank_of(compose_all(pa, pb, sigma))}
        else:
            (centre,) = {a.lo, a.hi} & {b.lo, b.hi}
            j_, k_ = a.lo + a.hi - centre, b.lo + b.hi - centre
            if gt.has_edge(j_, k_):
                report.details["triangle_pairs"] += 1
                pc = Transposition.of(j_, k_).as_permutation(n)
                expected = {g.rank_of(compose_all(pb, pa, sigma)), g.rank_of(compose_all(pc, pa, sigma))}
            else:
                expected = set()
        if found != expected:
            report.violations.append(
                {
                    "sigma": str(sigma),
                    "transpositions": [str(a), str(b)],
                    "found": _labels(g, found),
                    "expected": _labels(g, expected),
                }
            )
    return report


def _triangles(t: TranspositionSet) -> list[tuple[Transposition, Transposition, Transposition]]:
    gt = graph_of(t)
    out = []
    for i, j, k in combinations(range(1, t.n + 1), 3):
        if gt.has_edge(i, j) and gt.has_edge(j, k) and gt.has_edge(i, k):
            out.append((Transposition(i, j), Transposition(j, k), Transposition(i, k)))
    return out


def verify_k33(g: CayleyGraph, sigma: Permutation) -> LemmaReport:
    report = LemmaReport(Lemma.K33, details={"triangles": 0, "k33_found": 0})
    n, gens = g.n, g.generators
    index = {tr: k for k, tr in enumerate(gens)}
    s = g.rank_of(sigma)
    row = g.nbr[s]

    for a, b, c in _triangles(g.t):
        report.instances_checked += 1
        report.details["triangles"] += 1
        pa, pb, pc = (x.as_permutation(n) for x in (a, b, c))
        ab, ca, bc = compose(pa, pb), compose(pc, pa), compose(pb, pc)
        ba, ac, cb = compose(pb, pa), compose(pa, pc), compose(pc, pb)
        identities = ab == ca == bc and ba == ac == cb
        left = [s, g.rank_of(compose(ab, sigma)), g.rank_of(compose(ba, sigma))]
        right = [int(row[index[x]]) for x in (a, b, c)]
        induced = (
            len(set(left + right)) == 6
            and all(g.adjacent(u, v) for u in left for v in right)
            and not any(g.adjacent(u, v) for u, v in combinations(left, 2))
            and not any(g.adjacent(u, v) for u, v in combinations(right, 2))
        )
        if not (identities and induced):
            report.violations.append(
                {
                    "sigma": str(sigma),
                    "transpositions": [str(a), str(b), str(c)],
                    "product_identities": identities,
                    "induced_k33": induced,
                }
            )

    # Converse: a K_{3,3} through σ, aσ, bσ forces a, b into a triangle of G(T).
    gt = graph_of(g.t)
    for (i, a), (j, b) in combinations(enumerate(gens), 2):
        for k in range(len(gens)):
            if k in (i, j):
                continue
            report.instances_checked += 1
            others = g.common_neighbors(int(row[i]), int(row[j])) & set(g.nbr[row[k]].tolist())
            others.discard(s)
            if len(others) < 2:
                continue
            report.details["k33_found"] += 1
            shared = {a.lo, a.hi} & {b.lo, b.hi}
            in_triangle = bool(shared) and gt.has_edge(*sorted(({a.lo, a.hi} | {b.lo, b.hi}) - shared))
            if not in_triangle:
                report.violations.append(
                    {
                        "sigma": str(sigma),
                        "transpositions": [str(a), str(b), str(gens[k])],
                        "found": _labels(g, others),
                        "in_triangle": False,
                    }
                )
    return report


# -- four-transposition words equal to (1 2 3) --------------------------------


@dataclass(frozen=True)
class TupleFamily:
    id: int
    pattern: tuple[tuple[object, object], ...]

    @property
    def parametric(self) -> bool:
        return any("k" in pair for pair in self.pattern)

    def instantiate(self, k: int | None = None) -> tuple[Transposition, ...]:
        if self.parametric and k is None:
            raise DomainError(f"family {self.id} needs a value for k")
        return tuple(Transposition.of(*(k if x == "k" else x for x in pair)) for pair in self.pattern)

    def __str__(self) -> str:
        return ",".join("(" + " ".join(map(str, p)) + ")" for p in self.pattern)


TUPLE_FAMILIES = tuple(
    TupleFamily(i, p)
    for i, p in enumerate(
        [
            ((1, 3), (2, 3), (1, 2), (1, 3)),
            ((1, 3), (1, "k"), (1, 2), (2, "k")),
            ((2, 3), (1, 2), (2, 3), (1, 2)),
            ((2, 3), (3, "k"), (1, "k"), (3, "k")),
            ((2, "k"), (2, 3), (3, "k"), (1, 3)),
            ((2, "k"), (1, "k"), (3, "k"), (2, "k")),
            ((1, "k"), (3, "k"), (1, "k"), (1, 2)),
            ((1, "k"), (1, 2), (2, 3), (3, "k")),
        ],
        start=1,
    )
)


def classify_tuple(tup: tuple[Transposition, ...], n: int) -> list[tuple[TupleFamily, int | None]]:
    """Every (family, k) whose instance equals ``tup``; a well-formed answer has length 1."""
    hits = []
    for fam in TUPLE_FAMILIES:
        for k in (range(4, n + 1) if fam.parametric else [None]):
            if fam.instantiate(k) == tup:
                hits.append((fam, k))
    return hits


def three_cycle_tuples(n: int) -> list[tuple[Transposition, ...]]:
    """Brute force over all 4-tuples of transpositions of S_n."""
    if n < 3:
        raise DomainError("need n >= 3")
    trs = all_transpositions(n)
    perm = {tr: tr.as_permutation(n) for tr in trs}
    target = Permutation.from_cycles(n, (1, 2, 3))
    head, tail = Transposition(1, 2), Transposition(2, 3)
    out = []
    for tup in product(trs, repeat=4):
        seq = (head, *tup, tail)
        if any(_commute(x, y) for x, y in zip(seq, seq[1:])):
            continue
        if compose_all(*(perm[x] for x in tup)) == target:
            out.append(tup)
    return out


def classify_three_cycle_tuples(n: int) -> list[tuple[tuple[Transposition, ...], TupleFamily, int | None]]:
    out = []
    for tup in three_cycle_tuples(n):
        hits = classify_tuple(tup, n)
        if len(hits) != 1:
            raise AssertionError(f"tuple {tup} matches {len(hits)} families")
        fam, k = hits[0]
        out.append((tup, fam, k))
    return out


enumerate_lemma24_tuples = classify_three_cycle_tuples


def verify_tuple_classification(n: int) -> LemmaReport:
    """Survivors versus the union of instantiated families: no extras, no misses."""
    report = LemmaReport(Lemma.TUPLES, details={"survivors": 0})
    survivors = three_cycle_tuples(n)
    report.details["survivors"] = len(survivors)
    predicted = {fam.instantiate(k) for fam in TUPLE_FAMILIES for k in (range(4, n + 1) if fam.parametric else [None])}
    for tup in survivors:
        report.instances_checked += 1
        hits = classify_tuple(tup, n)
        used = {x for tr in tup for x in (tr.lo, tr.hi)}
        if len(hits) != 1 or len(used) > 4:
            report.violations.append({"tuple": [str(x) for x in tup], "families": [f.id for f, _ in hits]})
    for tup in sorted(predicted - set(survivors)):
        report.violations.append({"tuple": [str(x) for x in tup], "missing": True})
    return report


# -- alternating 6-cycles -----------------------------------------------------


def alternating_six_cycles(g: CayleyGraph, s_rank: int, s_idx: int, t_idx: int) -> list[tuple[int, ...]]:
    """6-cycles (σ, sσ, ., ., ., tσ) whose consecutive edge labels never commute."""
    gens = g.generators
    d = len(gens)
    noncomm = [[j for j in range(d) if j != i and gens[i].meets(gens[j])] for i in range(d)]
    nbr = g.nbr
    end = int(nbr[s_rank, t_idx])
    v1 = int(nbr[s_rank, s_idx])
    cycles = []
    for l2 in noncomm[s_idx]:
        v2 = int(nbr[v1, l2])
        for l3 in noncomm[l2]:
            v3 = int(nbr[v2, l3])
            for l4 in noncomm[l3]:
                v4 = int(nbr[v3, l4])
                for l5 in noncomm[l4]:
                    if l5 not in noncomm[t_idx] or int(nbr[v4, l5]) != end:
                        continue
                    cyc = (s_rank, v1, v2, v3, v4, end)
                    if len(set(cyc)) == 6:
                        cycles.append(cyc)
    return cycles


def verify_six_cycle(g: CayleyGraph, sigma: Permutation) -> LemmaReport:
    report = LemmaReport(Lemma.SIX_CYCLE, details={"applicable_pairs": 0, "gated_pairs": 0})
    n, gens = g.n, g.generators
    s = g.rank_of(sigma)
    counts = {}
    for (i, a), (j, b) in product(enumerate(gens), repeat=2):
        if i == j or not a.meets(b):
            continue
        cycles = alternating_six_cycles(g, s, i, j)
        if edges_share_short_cycle(g.t, a, b):
            report.details["gated_pairs"] += 1
            counts[f"{a},{b}"] = len(cycles)
            continue
        report.details["applicable_pairs"] += 1
        report.instances_checked += 1
        ps, pt = a.as_permutation(n), b.as_permutation(n)
        expected = tuple(
            g.rank_of(compose_all(*word, sigma))
            for word in [(), (ps,), (pt, ps), (ps, pt, ps), (ps, pt), (pt,)]
        )
        if cycles != [expected]:
            report.violations.append(
                {
                    "sigma": str(sigma),
                    "transpositions": [str(a), str(b)],
                    "cycles_found": len(cycles),
                    "expected": [g.label(r) for r in expected],
                }
            )
    if counts:
        report.details["gated_cycle_counts"] = counts
    return report


def run_lemma_suite(g: CayleyGraph, sigmas: list[Permutation]) -> dict[str, LemmaReport]:
    """The per-graph lemma checks aggregated over several base points."""
    reports = {
        Lemma.COMMUTE_DISJOINT.value: verify_commute_disjoint(g.t),
        Lemma.FOUR_CYCLE.value: LemmaReport(Lemma.FOUR_CYCLE),
        Lemma.K33.value: LemmaReport(Lemma.K33),
        Lemma.SIX_CYCLE.value: LemmaReport(Lemma.SIX_CYCLE),
    }
    for sigma in sigmas:
        reports[Lemma.FOUR_CYCLE.value].merge(verify_four_cycle(g, sigma))
        reports[Lemma.K33.value].merge(verify_k33(g, sigma))
        reports[Lemma.SIX_CYCLE.value].merge(verify_six_cycle(g, sigma))
    return reports
