import math
from itertools import combinations

import pytest

from cayleynorm.errors import ContractViolation, NotLiftable, PreconditionError
from cayleynorm.graphcore import Graph, automorphisms, enumerate_connected_classes, line_graph
from cayleynorm.permcore import Permutation, Transposition, all_transpositions, compose
from cayleynorm.transgraph import (
    Kind,
    TranspositionSet,
    classify,
    edges_share_short_cycle,
    generates_sn,
    graph_of,
    induce_line_automorphism,
    lift_line_automorphism,
)

from conftest import tset

T = Transposition


def generated_subgroup_order(t):
    """Orbit of the identity under left multiplication by the generators."""
    gens = [tr.as_permutation(t.n) for tr in t]
    seen = {Permutation.identity(t.n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = compose(s, p)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return len(seen)


def test_graph_of():
    assert graph_of(tset(4, (1, 2), (2, 3), (3, 4), (1, 4))) == Graph.cycle(4)
    assert graph_of(TranspositionSet(5, all_transpositions(5))) == Graph.complete(5)
    assert graph_of(tset(2, (1, 2))) == Graph(2, ((1, 2),))


def test_generates_examples():
    assert generates_sn(tset(5, (1, 2), (2, 3), (3, 4), (4, 5)))
    assert not generates_sn(tset(4, (1, 2), (3, 4)))
    assert generates_sn(TranspositionSet.from_graph(Graph.star(6)))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generation_matches_subgroup_closure(n):
    pairs = all_transpositions(n)
    for size in range(1, len(pairs) + 1):
        for members in combinations(pairs, size):
            t = TranspositionSet(n, members)
            assert generates_sn(t) == (generated_subgroup_order(t) == math.factorial(n))


def test_classify_examples():
    assert classify(tset(4, (1, 2), (2, 3), (3, 4), (1, 4))).kind is Kind.FOUR_CYCLE
    assert classify(TranspositionSet(5, all_transpositions(5))).kind is Kind.COMPLETE_GRAPH
    assert classify(TranspositionSet.from_graph(Graph.path(5))).kind is Kind.TREE
    assert classify(TranspositionSet.from_graph(Graph.cycle(5))).kind is Kind.GIRTH_AT_LEAST_5
    assert classify(TranspositionSet.from_graph(Graph.cycle(4).relabel(Permutation((2, 4, 1, 3))))).kind is Kind.FOUR_CYCLE
    assert classify(tset(4, (1, 2), (2, 3), (1, 3), (3, 4))).kind is Kind.OTHER
    with pytest.raises(PreconditionError):
        classify(tset(4, (1, 2), (3, 4)))


def test_classify_reports_one_kind_for_every_class():
    for n in (3, 4, 5, 6):
        kinds = [classify(TranspositionSet.from_graph(g)).kind for g in enumerate_connected_classes(n)]
        assert kinds.count(Kind.COMPLETE_GRAPH) == 1
        assert kinds.count(Kind.FOUR_CYCLE) == (1 if n == 4 else 0)


def test_short_cycle_examples():
    c4 = tset(4, (1, 2), (2, 3), (3, 4), (1, 4))
    assert edges_share_short_cycle(c4, T(1, 2), T(2, 3))
    path = TranspositionSet.from_graph(Graph.path(5))
    assert not edges_share_short_cycle(path, T(1, 2), T(2, 3))
    tri = tset(3, (1, 2), (2, 3), (1, 3))
    assert edges_share_short_cycle(tri, T(1, 2), T(2, 3))
    c5 = TranspositionSet.from_graph(Graph.cycle(5))
    assert not edges_share_short_cycle(c5, T(1, 2), T(2, 3))
    with pytest.raises(PreconditionError):
        edges_share_short_cycle(c4, T(1, 2), T(3, 4))
    with pytest.raises(PreconditionError):
        edges_share_short_cycle(c4, T(1, 2), T(1, 2))


def test_trees_never_share_short_cycles():
    for g in enumerate_connected_classes(6):
        t = TranspositionSet.from_graph(g)
        if classify(t).kind is not Kind.TREE:
            continue
        for a, b in combinations(t.members, 2):
            if a.meets(b):
                assert not edges_share_short_cycle(t, a, b)


def test_induce_examples():
    path3 = Graph.path(3)
    assert induce_line_automorphism(path3, Permutation.identity(3)).is_identity()
    assert induce_line_automorphism(path3, Permutation.from_cycles(3, (1, 3))) == Permutation((2, 1))
    c4 = Graph.cycle(4)  # edges in order (1,2), (1,4), (2,3), (3,4)
    rot = Permutation.from_cycles(4, (1, 2, 3, 4))
    # (1,2)->(2,3), (2,3)->(3,4), (3,4)->(1,4), (1,4)->(1,2)
    assert induce_line_automorphism(c4, rot) == Permutation((3, 1, 4, 2))
    with pytest.raises(ContractViolation):
        induce_line_automorphism(Graph.path(4), Permutation.from_cycles(4, (1, 2)))


def test_lift_identity_and_star():
    star = Graph.star(5)
    lg, _ = line_graph(star)
    assert lift_line_automorphism(star, Permutation.identity(lg.n)).is_identity()
    count, psis = automorphisms(lg)
    assert count == 24
    lifts = {lift_line_automorphism(star, psi) for psi in psis}
    assert len(lifts) == 24 and all(phi(1) == 1 for phi in lifts)
    assert automorphisms(star)[0] == 24


def test_lift_round_trip_all_n5_classes():
    for g in enumerate_connected_classes(5):
        for phi in automorphisms(g)[1]:
            assert lift_line_automorphism(g, induce_line_automorphism(g, phi)) == phi


def test_induce_is_a_homomorphism():
    for g in enumerate_connected_classes(5):
        elems = automorphisms(g)[1]
        for a in elems[:6]:
            for b in elems[:6]:
                assert induce_line_automorphism(g, compose(a, b)) == compose(
                    induce_line_automorphism(g, a), induce_line_automorphism(g, b)
                )


def test_lift_rejects_non_automorphisms_and_small_graphs():
    g = Graph.path(5)
    with pytest.raises(NotLiftable):
        lift_line_automorphism(g, Permutation((2, 1, 3, 4)))
    with pytest.raises(PreconditionError):
        lift_line_automorphism(Graph.path(4), Permutation.identity(3))


def test_transposition_set_validation():
    with pytest.raises(ValueError):
        TranspositionSet(3, ())
    with pytest.raises(ValueError):
        TranspositionSet(3, (T(1, 2), T(1, 2)))
    with pytest.raises(ValueError):
        TranspositionSet(3, (T(1, 4),))
