import math
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from cayleynorm.errors import DomainError, SizeMismatchError
from cayleynorm.permcore import (
    Permutation,
    Transposition,
    all_permutations,
    all_transpositions,
    compose,
    compose_all,
    inverse,
    rank,
    rank_rows,
    unrank,
)

T = Transposition


def P(n, *cycles):
    return Permutation.from_cycles(n, *cycles)


def perm_strategy(n):
    return st.permutations(list(range(1, n + 1))).map(lambda xs: Permutation(tuple(xs)))


def test_compose_matches_products_in_the_lemma_proof():
    three_cycle = P(3, (1, 3, 2))
    assert compose(T(2, 3).as_permutation(3), T(1, 2).as_permutation(3)) == three_cycle
    assert compose(T(1, 3).as_permutation(3), T(2, 3).as_permutation(3)) == three_cycle
    assert compose(T(1, 2).as_permutation(3), T(1, 3).as_permutation(3)) == three_cycle


def test_compose_identity_and_involution():
    s = P(5, (1, 4, 2), (3, 5))
    assert compose(s, Permutation.identity(5)) == s
    t = T(1, 2).as_permutation(4)
    assert compose(t, t).is_identity()


def test_compose_size_mismatch():
    with pytest.raises(SizeMismatchError):
        compose(Permutation.identity(3), Permutation.identity(4))


@pytest.mark.parametrize(
    "p, expected",
    [
        (P(3, (1, 2, 3)), P(3, (1, 3, 2))),
        (P(3, (1, 2)), P(3, (1, 2))),
        (Permutation.identity(4), Permutation.identity(4)),
    ],
)
def test_inverse_examples(p, expected):
    assert inverse(p) == expected


def test_rank_extremes():
    assert rank(Permutation.identity(6)) == 0
    assert rank(Permutation(tuple(range(6, 0, -1)))) == math.factorial(6) - 1
    assert unrank(0, 4).is_identity()
    assert unrank(23, 4).images == (4, 3, 2, 1)


def test_rank_agrees_with_lexicographic_enumeration():
    for r, images in enumerate(permutations(range(1, 6))):
        assert rank(Permutation(images)) == r
        assert unrank(r, 5).images == images


def test_unrank_out_of_range():
    with pytest.raises(DomainError):
        unrank(120, 5)
    with pytest.raises(DomainError):
        unrank(-1, 5)


@given(perm_strategy(7))
def test_rank_round_trip_n7(p):
    assert unrank(rank(p), 7) == p


def test_rank_rows_matches_scalar_rank():
    table = all_permutations(5)
    assert list(rank_rows(table)) == list(range(120))


@given(perm_strategy(6), perm_strategy(6), perm_strategy(6))
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@given(perm_strategy(6))
def test_inverse_is_two_sided(p):
    assert compose(p, inverse(p)).is_identity()
    assert compose(inverse(p), p).is_identity()


def test_apply_consistency_exhaustive():
    for n in range(1, 5):
        perms = [Permutation(x) for x in permutations(range(1, n + 1))]
        for f in perms:
            for g in perms:
                fg = compose(f, g)
                assert all(fg(x) == f(g(x)) for x in range(1, n + 1))


def test_transposition_as_permutation_swaps_only_its_pair():
    p = T(2, 5).as_permutation(6)
    assert p(2) == 5 and p(5) == 2
    assert all(p(x) == x for x in (1, 3, 4, 6))


def test_transposition_normalisation():
    assert T.of(4, 2) == T(2, 4)
    with pytest.raises(DomainError):
        T(3, 3)
    with pytest.raises(DomainError):
        T(3, 1)


def test_all_transpositions():
    assert all_transpositions(3) == (T(1, 2), T(1, 3), T(2, 3))
    assert len(all_transpositions(5)) == 10
    assert all_transpositions(2) == (T(1, 2),)
    with pytest.raises(DomainError):
        all_transpositions(1)


def test_cycle_notation():
    assert str(Permutation.identity(4)) == "id"
    assert str(P(5, (1, 2, 3), (4, 5))) == "(1 2 3)(4 5)"
    assert str(P(5, (3, 1))) == "(1 3)"


def test_parity_and_compose_all():
    assert P(4, (1, 2)).parity() == 1
    assert P(4, (1, 2, 3)).parity() == 0
    a, b, c = (T(*p).as_permutation(3) for p in [(1, 2), (2, 3), (1, 3)])
    assert compose_all(a, b, c) == compose(a, compose(b, c))


def test_invalid_images_rejected():
    with pytest.raises(DomainError):
        Permutation((1, 1, 2))
    with pytest.raises(DomainError):
        Permutation(())
