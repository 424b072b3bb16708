import math

import numpy as np
import pytest

from cayleynorm.errors import PreconditionError
from cayleynorm.graphcore import Graph, enumerate_connected_classes
from cayleynorm.symmetry import (
    Method,
    aut_order,
    commuting_preserving_bijections,
    fix_neighborhood_stabilizer,
    is_closed,
    is_normal,
    naive_automorphisms,
    normalizes_all_right_translations,
    restriction_to_generators,
    stabilizer_of_identity,
    verify_direct_product,
)

from conftest import cayley_of


def small_classes():
    for n in (2, 3, 4):
        yield from enumerate_connected_classes(n)


def test_stabilizer_sizes(c4_cayley, path5_cayley):
    assert len(stabilizer_of_identity(c4_cayley)) == 32
    assert len(stabilizer_of_identity(path5_cayley)) == 2
    assert len(stabilizer_of_identity(cayley_of(Graph.complete(3)))) == 12


def test_path5_stabilizer_matches_naive_enumeration(path5_cayley):
    naive = naive_automorphisms(path5_cayley.nbr)
    assert len(naive) == 240
    fixing_id = sorted(p.tolist() for p in naive if p[0] == 0)
    assert fixing_id == sorted(p.tolist() for p in stabilizer_of_identity(path5_cayley))


def test_aut_order_examples(c4_cayley, path5_cayley):
    assert aut_order(c4_cayley).aut_order == 768
    assert aut_order(path5_cayley).aut_order == 240
    assert aut_order(cayley_of(Graph.complete(3))).aut_order == 72


def test_every_stabilizer_element_is_an_automorphism_fixing_id(c4_cayley, k5_cayley):
    for g in (c4_cayley, k5_cayley):
        for pi in stabilizer_of_identity(g):
            assert pi[0] == 0 and g.is_automorphism(pi)


def test_fix_neighborhood_examples(path5_cayley, k5_cayley, c4_cayley):
    fixed = fix_neighborhood_stabilizer(path5_cayley)
    assert len(fixed) == 1 and np.array_equal(fixed[0], np.arange(120))
    assert len(fix_neighborhood_stabilizer(k5_cayley)) > 1
    assert len(fix_neighborhood_stabilizer(c4_cayley)) > 1
    for pi in fix_neighborhood_stabilizer(k5_cayley):
        start = k5_cayley.nbr[0]
        assert np.array_equal(pi[start], start)


def test_is_normal_examples(path5_cayley, c4_cayley, k5_cayley):
    for method in (Method.FIX_NEIGHBORHOOD, Method.CONJUGATION):
        v = is_normal(path5_cayley, method)
        assert v.is_normal and v.witness is None
        assert v.actual_order == v.expected_normal_order == 240
    v = is_normal(c4_cayley, Method.CONJUGATION)
    assert not v.is_normal and v.witness is not None
    assert (v.actual_order, v.expected_normal_order) == (768, 192)
    v = is_normal(k5_cayley, Method.FIX_NEIGHBORHOOD)
    assert not v.is_normal and v.witness is not None
    assert (v.actual_order, v.expected_normal_order) == (28800, 14400)


def test_fix_neighborhood_needs_n_at_least_5(c4_cayley):
    with pytest.raises(PreconditionError):
        is_normal(c4_cayley, Method.FIX_NEIGHBORHOOD)
    with pytest.raises(PreconditionError):
        is_normal(c4_cayley, Method.BOTH)


@pytest.mark.parametrize(
    "graph, order",
    [(Graph.path(5), 240), (Graph.star(5), 2880), (Graph.star(6), 86400)],
)
def test_verify_direct_product(graph, order):
    g = cayley_of(graph)
    summary = aut_order(g)
    assert summary.aut_order == order
    assert verify_direct_product(g, summary)


def test_direct_product_requires_normality(c4_cayley):
    with pytest.raises(PreconditionError):
        verify_direct_product(c4_cayley)


def test_orbit_stabilizer_matches_naive_count_for_small_graphs():
    for graph in small_classes():
        g = cayley_of(graph)
        assert aut_order(g).aut_order == len(naive_automorphisms(g.nbr))


def test_methods_agree_at_n5():
    for graph in enumerate_connected_classes(5):
        g = cayley_of(graph)
        s = aut_order(g)
        assert is_normal(g, Method.FIX_NEIGHBORHOOD, s).is_normal == is_normal(g, Method.CONJUGATION, s).is_normal


def test_generator_conjugation_matches_full_conjugation():
    for graph in small_classes():
        g = cayley_of(graph)
        s = aut_order(g)
        assert is_normal(g, Method.CONJUGATION, s).is_normal == normalizes_all_right_translations(g, s.stab_elements)


@pytest.mark.parametrize("graph", [Graph.cycle(4), Graph.complete(4), Graph.star(5), Graph.complete(5)])
def test_stabilizer_is_closed(graph):
    stab = stabilizer_of_identity(cayley_of(graph))
    assert is_closed(stab)


def test_restrictions_preserve_commuting(k5_cayley, c4_cayley):
    for g in (k5_cayley, c4_cayley):
        gens = g.generators
        for pi in stabilizer_of_identity(g):
            f = restriction_to_generators(g, pi)
            for i in range(len(gens)):
                for j in range(len(gens)):
                    assert gens[i].meets(gens[j]) == gens[f[i]].meets(gens[f[j]])


def test_commuting_preserving_bijections_count(k5_cayley):
    # commuting graph on the 10 transpositions of S_5 is the Petersen graph
    assert sum(1 for _ in commuting_preserving_bijections(k5_cayley)) == 120


def test_normal_classes_hit_the_expected_order_and_exceptions_exceed_it():
    for n in (3, 4, 5):
        for graph in enumerate_connected_classes(n):
            g = cayley_of(graph)
            v = is_normal(g, Method.CONJUGATION)
            if v.is_normal:
                assert v.actual_order == v.expected_normal_order
            else:
                assert v.actual_order > v.expected_normal_order


def test_stabilizer_search_is_deterministic(c4_cayley):
    a = stabilizer_of_identity(c4_cayley)
    b = stabilizer_of_identity(c4_cayley)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    assert math.factorial(4) * len(a) == 768
