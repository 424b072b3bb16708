"""Edge-list parsing and the JSON-ready reports behind the command line."""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import cayley
from .errors import CapacityError, ParseError, PreconditionError
from .graphcore import (
    Graph,
    automorphisms,
    canonical_form,
    enumerate_connected_classes,
    line_graph,
)
from .permcore import Permutation, Transposition, unrank
from .structure import run_lemma_suite, verify_tuple_classification
from .symmetry import MAX_SEARCH_N, Method, aut_order, is_normal, verify_direct_product
from .transgraph import (
    Kind,
    TranspositionSet,
    classify,
    generates_sn,
    graph_of,
    induce_line_automorphism,
    lift_line_automorphism,
)

SWEEP_RANGE = range(3, 7)


def parse_edge_list(text: str) -> TranspositionSet:
    """Parse ``n`` followed by one ``i j`` pair per line; ``#`` starts a comment line."""
    n = None
    pairs: list[Transposition] = []
    seen: dict[Transposition, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1 or not fields[0].isdigit():
                raise ParseError(f"expected the vertex count, got {line!r}", lineno)
            n = int(fields[0])
            if n < 2:
                raise ParseError("vertex count must be at least 2", lineno)
            continue
        if len(fields) != 2 or not all(f.lstrip("-").isdigit() for f in fields):
            raise ParseError(f"expected two integers 'i j', got {line!r}", lineno)
        i, j = int(fields[0]), int(fields[1])
        if not (1 <= i <= n and 1 <= j <= n):
            raise ParseError(f"vertex out of range 1..{n} in {line!r}", lineno)
        if i >= j:
            raise ParseError(f"pair must satisfy i < j, got {line!r}", lineno)
        tr = Transposition(i, j)
        if tr in seen:
            raise ParseError(f"duplicate edge {i} {j} (first on line {seen[tr]})", lineno)
        seen[tr] = lineno
        pairs.append(tr)
    if n is None:
        raise ParseError("empty input: missing vertex count")
    if not pairs:
        raise ParseError("no edges given")
    return TranspositionSet(n, tuple(pairs))


def format_edge_list(t: TranspositionSet) -> str:
    return "\n".join([str(t.n)] + [f"{a} {b}" for a, b in t.pairs()]) + "\n"


def random_sigmas(n: int, count: int, seed: int = 0) -> list[Permutation]:
    """The identity followed by ``count`` pseudo-random permutations."""
    rng = random.Random(seed * 1000003 + n)
    total = math.factorial(n)
    return [Permutation.identity(n)] + [unrank(rng.randrange(total), n) for _ in range(count)]


def _describe_witness(g: cayley.CayleyGraph, pi: np.ndarray | None, limit: int = 6) -> dict | None:
    if pi is None:
        return None
    moved = np.flatnonzero(pi != np.arange(g.order))
    return {
        "moved_vertices": int(moved.size),
        "sample": [f"{g.label(int(v))} -> {g.label(int(pi[v]))}" for v in moved[:limit]],
    }


@dataclass
class AnalysisReport:
    n: int
    edges: list[list[int]]
    classification: str
    generates_sn: bool
    aut_g_order: int
    cayley_vertices: int
    cayley_edges: int
    stab_order: int
    aut_order: int
    expected_normal_order: int
    is_normal: bool
    criterion_used: str
    verdicts: dict
    lemma_results: dict | None
    elapsed_ms: float
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def resolve_method(n: int, method: Method | str | None) -> tuple[Method, list[str]]:
    notes = []
    if method is None:
        return (Method.BOTH if n >= 5 else Method.CONJUGATION), notes
    method = Method(method)
    if n < 5 and method is not Method.CONJUGATION:
        notes.append(f"{method.value} criterion needs n >= 5; fell back to conjugation")
        method = Method.CONJUGATION
    return method, notes


def analyze(
    t: TranspositionSet,
    method: Method | str | None = None,
    skip_lemmas: bool = False,
    sigma_count: int = 5,
    seed: int = 0,
) -> AnalysisReport:
    start = time.perf_counter()
    if not generates_sn(t):
        raise PreconditionError("transposition graph is disconnected, so T does not generate S_n")
    if t.n > MAX_SEARCH_N:
        raise CapacityError(f"analysis supports n <= {MAX_SEARCH_N}")
    method, notes = resolve_method(t.n, method)
    kind = classify(t).kind
    aut_g, _ = automorphisms(graph_of(t))
    g = cayley.build(t)
    summary = aut_order(g)
    summary.criterion = method

    methods = [Method.FIX_NEIGHBORHOOD, Method.CONJUGATION] if method is Method.BOTH else [method]
    verdicts = {}
    for m in methods:
        v = is_normal(g, m, summary)
        verdicts[m.value] = {"is_normal": v.is_normal, "witness": _describe_witness(g, v.witness)}
    normal_flags = {v["is_normal"] for v in verdicts.values()}
    if len(normal_flags) > 1:
        notes.append("normality criteria disagree")

    lemma_results = None
    if not skip_lemmas:
        suite = run_lemma_suite(g, random_sigmas(t.n, sigma_count, seed))
        lemma_results = {
            name: {
                "passed": rep.passed,
                "violation_count": len(rep.violations),
                "instances_checked": rep.instances_checked,
            }
            for name, rep in suite.items()
        }

    return AnalysisReport(
        n=t.n,
        edges=[list(p) for p in t.pairs()],
        classification=kind.value,
        generates_sn=True,
        aut_g_order=aut_g,
        cayley_vertices=g.order,
        cayley_edges=g.num_edges,
        stab_order=summary.stab_order,
        aut_order=summary.aut_order,
        expected_normal_order=math.factorial(t.n) * aut_g,
        is_normal=all(normal_flags),
        criterion_used=method.value,
        verdicts=verdicts,
        lemma_results=lemma_results,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 3),
        notes=notes,
    )


# -- sweep ----------------------------------------------------------------------


@dataclass
class SweepSummary:
    n: int
    classes_total: int
    classes_normal: int
    exceptions: list[dict]
    corollary_violations: list[dict]
    characterization_holds: bool
    classes: list[dict]
    elapsed_ms: float

    def as_dict(self) -> dict:
        return asdict(self)


_EXCEPTIONAL = {Kind.FOUR_CYCLE, Kind.COMPLETE_GRAPH}


def _sweep_one(graph: Graph) -> dict:
    t = TranspositionSet.from_graph(graph)
    report = analyze(t, skip_lemmas=True)
    g = cayley.build(t)
    direct = None
    if report.is_normal:
        direct = verify_direct_product(g)
    return {
        "canonical_form": canonical_form(graph),
        "edges": report.edges,
        "classification": report.classification,
        "aut_g_order": report.aut_g_order,
        "stab_order": report.stab_order,
        "aut_order": report.aut_order,
        "expected_normal_order": report.expected_normal_order,
        "is_normal": report.is_normal,
        "criterion_used": report.criterion_used,
        "direct_product": direct,
    }


def sweep(n: int, jobs: int = 1) -> SweepSummary:
    """Analyse every connected transposition graph on n vertices up to isomorphism."""
    if n not in SWEEP_RANGE:
        if n > SWEEP_RANGE[-1]:
            raise CapacityError(f"sweep supports n <= {SWEEP_RANGE[-1]}")
        raise PreconditionError(f"sweep needs n >= {SWEEP_RANGE[0]}")
    start = time.perf_counter()
    graphs = enumerate_connected_classes(n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_sweep_one, graphs))
    else:
        rows = [_sweep_one(gr) for gr in graphs]
    rows.sort(key=lambda r: r["canonical_form"])

    exceptions, violations = [], []
    holds = True
    for row in rows:
        exceptional = Kind(row["classification"]) in _EXCEPTIONAL
        if not row["is_normal"]:
            exceptions.append({"canonical_form": row["canonical_form"], "reason": row["classification"]})
        if row["is_normal"] == exceptional:
            holds = False
        if row["is_normal"] and (row["aut_order"] != row["expected_normal_order"] or not row["direct_product"]):
            violations.append(
                {
                    "canonical_form": row["canonical_form"],
                    "aut_order": row["aut_order"],
                    "expected_normal_order": row["expected_normal_order"],
                    "direct_product": row["direct_product"],
                }
            )
    return SweepSummary(
        n=n,
        classes_total=len(rows),
        classes_normal=sum(r["is_normal"] for r in rows),
        exceptions=exceptions,
        corollary_violations=violations,
        characterization_holds=holds and not violations,
        classes=rows,
        elapsed_ms=round((time.perf_counter() - start) * 1000, 3),
    )


# -- lemma and lift listings ------------------------------------------------------


def lemma_report(t: TranspositionSet, sigma_count: int = 5, seed: int = 0) -> dict:
    if not generates_sn(t):
        raise PreconditionError("transposition graph is disconnected, so T does not generate S_n")
    if t.n > MAX_SEARCH_N:
        raise CapacityError(f"lemma checks support n <= {MAX_SEARCH_N}")
    g = cayley.build(t)
    sigmas = random_sigmas(t.n, sigma_count, seed)
    suite = run_lemma_suite(g, sigmas)
    if t.n >= 3:
        suite["tuples"] = verify_tuple_classification(max(t.n, 4))
    lemmas = {name: rep.as_dict() for name, rep in suite.items()}
    return {
        "n": t.n,
        "edges": [list(p) for p in t.pairs()],
        "sigmas": [str(s) for s in sigmas],
        "lemmas": lemmas,
        "all_passed": all(rep.passed for rep in suite.values()),
    }


def lift_listing(t: TranspositionSet) -> dict:
    """Lift every automorphism of L(G) and confirm the correspondence is bijective."""
    if not generates_sn(t):
        raise PreconditionError("transposition graph is disconnected, so T does not generate S_n")
    g = graph_of(t)
    lg, table = line_graph(g)
    aut_g, _ = automorphisms(g)
    aut_l, psis = automorphisms(lg)
    pairs, lifted = [], set()
    round_trip = True
    for psi in psis:
        phi = lift_line_automorphism(g, psi)
        round_trip &= induce_line_automorphism(g, phi) == psi
        lifted.add(phi)
        pairs.append({"line_automorphism": str(psi), "graph_automorphism": str(phi)})
    return {
        "n": t.n,
        "edges": [list(p) for p in t.pairs()],
        "line_graph_vertices": [list(e) for e in table],
        "aut_g_order": aut_g,
        "aut_line_order": aut_l,
        "round_trip": round_trip,
        "bijective": round_trip and len(lifted) == aut_l == aut_g,
        "correspondence": pairs,
    }
