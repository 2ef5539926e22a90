import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation as SymPerm

from irreps.perm import (
    Permutation,
    bubblesort_decompose,
    compose,
    cycle_type,
    hard_instance,
    inversions,
    partitions,
    representative,
    sign,
    stats,
    validate_partition,
    word_to_permutation,
)

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(
    lambda images: Permutation(tuple(images)))


def same_size_pair(n_max=10):
    return st.integers(1, n_max).flatmap(lambda n: st.tuples(
        st.permutations(range(1, n + 1)), st.permutations(range(1, n + 1)))).map(
        lambda pq: (Permutation(tuple(pq[0])), Permutation(tuple(pq[1]))))


def to_sympy(p: Permutation) -> SymPerm:
    return SymPerm([x - 1 for x in p.images])


# ---- compose ----

def test_compose_identity_is_neutral():
    p = Permutation((3, 1, 4, 2))
    assert compose(Permutation.identity(4), p) == p
    assert compose(p, Permutation.identity(4)) == p


def test_compose_with_inverse_is_identity():
    p = Permutation((3, 1, 4, 2, 5))
    assert compose(p, p.inverse()).is_identity()
    assert compose(p.inverse(), p).is_identity()


def test_compose_hand_example():
    assert compose(Permutation((2, 1, 3)), Permutation((1, 3, 2))) == Permutation((2, 3, 1))


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation((1, 2)), Permutation((1, 2, 3)))


@given(same_size_pair(7), st.data())
def test_compose_associative(pq, data):
    p, q = pq
    r = Permutation(tuple(data.draw(st.permutations(range(1, p.n + 1)))))
    assert (p * q) * r == p * (q * r)


@given(same_size_pair())
def test_compose_pointwise(pq):
    p, q = pq
    pq_ = p * q
    assert all(pq_(i) == p(q(i)) for i in range(1, p.n + 1))


# ---- bubblesort ----

def test_bubblesort_identity_is_empty():
    assert bubblesort_decompose(Permutation.identity(5)) == []


def test_bubblesort_generator():
    assert bubblesort_decompose(Permutation((2, 1))) == [1]


def test_bubblesort_transposition_13():
    p = Permutation.transposition(3, 1, 3)
    word = bubblesort_decompose(p)
    assert len(word) == 3
    assert word_to_permutation(3, word) == p


def test_bubblesort_exhaustive_s5():
    for images in itertools.permutations(range(1, 6)):
        p = Permutation(images)
        word = bubblesort_decompose(p)
        assert word_to_permutation(5, word) == p
        assert len(word) == stats(p).coxeter_length == inversions(p)
        assert len(word) <= 10


@given(perms)
def test_bubblesort_word_reproduces_p(p):
    word = bubblesort_decompose(p)
    assert word_to_permutation(p.n, word) == p
    assert len(word) == to_sympy(p).inversions()
    assert all(1 <= i < p.n for i in word)


# ---- cycle type ----

def test_cycle_type_worked_example():
    assert cycle_type(Permutation((2, 3, 1, 5, 4))) == (3, 2)


def test_cycle_type_identity_and_ncycle():
    assert cycle_type(Permutation.identity(4)) == (1, 1, 1, 1)
    assert cycle_type(Permutation.from_cycles(6, [[1, 2, 3, 4, 5, 6]])) == (6,)


@given(perms)
def test_cycle_type_matches_sympy(p):
    structure = to_sympy(p).cycle_structure
    expected = sorted((length for length, count in structure.items() for _ in range(count)), reverse=True)
    assert list(cycle_type(p)) == expected


@given(same_size_pair())
def test_cycle_type_conjugation_invariant(pg):
    p, g = pg
    assert cycle_type(g * p * g.inverse()) == cycle_type(p)


def test_representative_has_requested_cycle_type():
    for n in range(1, 8):
        for mu in partitions(n):
            assert cycle_type(representative(mu)) == mu


def test_partitions_counts():
    # p(n) for n = 1..10
    assert [len(partitions(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


# ---- stats ----

def test_stats_identity():
    s = stats(Permutation.identity(6))
    assert (s.sign, s.min_transpositions, s.moved, s.largest_moved, s.coxeter_length) == (1, 0, 0, 0, 0)


@pytest.mark.parametrize("n", [2, 3, 5, 9])
def test_stats_transposition_1n(n):
    s = stats(Permutation.transposition(n, 1, n))
    assert (s.sign, s.min_transpositions, s.moved, s.largest_moved, s.coxeter_length) == (-1, 1, 2, n, 2 * n - 3)


def test_stats_three_cycle():
    s = stats(Permutation((2, 3, 1)))
    assert (s.sign, s.min_transpositions, s.moved, s.largest_moved, s.coxeter_length) == (1, 2, 3, 3, 2)


@given(perms)
def test_stats_match_sympy(p):
    sp = to_sympy(p)
    s = stats(p)
    assert s.sign == sp.signature() == sign(p)
    assert s.sign == (-1) ** s.coxeter_length
    assert s.coxeter_length == sp.inversions()
    assert s.min_transpositions == p.n - sp.cycles
    assert s.moved == len(sp.support())


def test_sign_multiplicative_random_pairs():
    rng = np.random.default_rng(5)
    for _ in range(1000):
        n = int(rng.integers(1, 11))
        p, q = Permutation.random(n, rng), Permutation.random(n, rng)
        assert sign(p * q) == sign(p) * sign(q)


# ---- hard instance ----

def test_hard_instance_examples():
    assert hard_instance(2) == Permutation((2, 1))
    assert hard_instance(5) == Permutation((5, 2, 3, 4, 1))
    s = stats(hard_instance(8))
    assert (s.moved, s.largest_moved, s.coxeter_length) == (2, 8, 13)


def test_hard_instance_rejects_small_n():
    with pytest.raises(ValueError):
        hard_instance(1)


# ---- validation and JSON ----

@pytest.mark.parametrize("images", [(), (1, 1), (0, 1), (2, 3), (1, 2, 4)])
def test_invalid_permutations(images):
    with pytest.raises(ValueError):
        Permutation(images)


@pytest.mark.parametrize("parts", [(), (1, 2), (3, 0), (-1,)])
def test_invalid_partitions(parts):
    with pytest.raises(ValueError):
        validate_partition(parts)


def test_partition_sum_mismatch():
    with pytest.raises(ValueError):
        validate_partition((2, 1), 4)


@given(perms)
def test_json_round_trip(p):
    assert Permutation.from_json(p.to_json()) == p
