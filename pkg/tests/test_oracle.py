"""Brute-force engine: peak statistics, exhaustive counts, boundary tables."""

import itertools
import math

import pytest
from hypothesis import given, strategies as st

from peaklab.compositions import Composition, EMPTY, enumerate_admissible, is_admissible, reverse_r
from peaklab.oracle import (
    CountMatrix,
    ExhaustionLimitError,
    count_bruteforce,
    first_ini_member,
    ini_matrix,
    int_classes,
    int_matrix,
    pattern_of,
    peak_composition,
    peak_set,
    permutations_with_composition,
    t_vector,
)

permutation_words = st.permutations(list(range(1, 7)))


def test_peak_set_examples():
    assert peak_set((2, 6, 5, 1, 4, 3)).positions == (2, 5)
    assert peak_set((1, 2, 3, 4)).positions == ()
    assert peak_set((1, 3, 2)).positions == (2,)
    assert peak_set(()).positions == ()


def test_peak_composition_examples():
    assert peak_composition((2, 6, 5, 1, 4, 3)) == Composition((2, 3, 1))
    assert peak_composition((1, 2)) == Composition((2,))
    assert peak_composition(()) == EMPTY


def test_pattern_of_examples():
    assert pattern_of((7, 3, 9)) == (2, 1, 3)
    assert pattern_of((1, 2, 3)) == (1, 2, 3)
    assert pattern_of((5, 8, 2, 6)) == (2, 4, 1, 3)
    with pytest.raises(ValueError):
        pattern_of((4, 4, 1))


@given(permutation_words)
def test_pattern_of_idempotent_and_peak_preserving(word):
    word = tuple(word)
    assert pattern_of(word) == word
    shifted = tuple(v + 17 for v in word)
    assert pattern_of(shifted) == word
    assert peak_set(shifted) == peak_set(word)


def test_count_examples():
    assert count_bruteforce(Composition((2, 1))) == 2
    assert count_bruteforce(Composition((2, 2, 2))) == 96
    assert count_bruteforce(Composition((1, 2))) == 0
    assert count_bruteforce(EMPTY) == 1
    assert count_bruteforce(Composition((1,))) == 1


def test_exhaustion_limit():
    with pytest.raises(ExhaustionLimitError):
        count_bruteforce(Composition((11,)))
    with pytest.raises(ExhaustionLimitError):
        count_bruteforce(Composition((4, 4)), limit=7)
    assert count_bruteforce(Composition((4, 4)), limit=8) == 2176
    with pytest.raises(ExhaustionLimitError):
        t_vector(Composition((6, 5)))
    with pytest.raises(ExhaustionLimitError):
        int_matrix(Composition((8, 3)))


def test_counts_partition_the_symmetric_group():
    for n in range(1, 8):
        total = sum(count_bruteforce(c) for c in enumerate_admissible(n))
        assert total == math.factorial(n)


def test_positive_exactly_on_admissible():
    for n in range(1, 8):
        seen = set(enumerate_admissible(n))
        for parts in itertools.product(range(1, n + 1), repeat=2):
            if sum(parts) == n:
                c = Composition(parts)
                assert (count_bruteforce(c) > 0) == (c in seen)


def test_reversal_invariance():
    for n in range(2, 8):
        for c in enumerate_admissible(n):
            if len(c) >= 2:
                assert count_bruteforce(c) == count_bruteforce(reverse_r(c))


def test_int_matrix_examples():
    assert int_matrix(Composition((5, 2))).at(7, 2) == 7
    assert int_matrix(Composition((4, 3))).at(2, 4) == 2
    for c in (Composition((5,)), Composition((3, 2))):
        m = int_matrix(c)
        for a in range(1, m.n + 1):
            assert m.at(a, a) == 0
            assert m.at(1, a) == 0
            assert m.at(a, 1) == 0


def test_int_below_ini_entrywise():
    for n in range(2, 7):
        for c in enumerate_admissible(n):
            mi, mn = int_matrix(c), ini_matrix(c)
            for a in range(1, n + 1):
                for b in range(1, n + 1):
                    assert mi.at(a, b) <= mn.at(a, b)


def test_ini_matrix_small():
    m = ini_matrix(Composition((3,)))
    assert m.at(1, 3) == 1
    assert m.at(1, 2) == 0
    assert m.at(2, 3) == 1
    # column sums of Ini reproduce the t vector
    for c in (Composition((2, 2)), Composition((3, 2)), Composition((5,))):
        m = ini_matrix(c)
        vec = t_vector(c)
        n = c.size
        for b in range(1, n + 1):
            assert vec[b - 1] == sum(m.at(a, b) for a in range(1, n + 1))


def test_boundary_tables_reject_empty_composition():
    with pytest.raises(ValueError):
        int_matrix(EMPTY)
    with pytest.raises(ValueError):
        ini_matrix(EMPTY)


def test_t_vector_examples():
    assert t_vector(Composition((2, 2))) == (0, 1, 2, 2)
    assert t_vector(Composition((4,))) == (0, 1, 2, 4)
    assert t_vector(Composition((3, 2, 3))) == (0, 96, 192, 288, 384, 480, 576, 672)
    assert t_vector(EMPTY) == ()
    assert t_vector(Composition((1, 2))) == (0, 0, 0)


def test_count_matrix_indexing_and_equality():
    m = CountMatrix(2, ((0, 1), (2, 3)))
    assert m.at(1, 2) == 1 and m.at(2, 1) == 2
    with pytest.raises(IndexError):
        m.at(0, 1)
    with pytest.raises(IndexError):
        m.at(1, 3)
    assert m == CountMatrix(2, ((0, 1), (2, 3)))
    assert m != CountMatrix(2, ((0, 1), (2, 4)))
    with pytest.raises(AttributeError):
        m.n = 3


def test_enumeration_is_lexicographic_and_complete():
    assert list(permutations_with_composition(Composition((2, 1)))) == [
        (1, 3, 2), (2, 3, 1)]
    assert list(permutations_with_composition(EMPTY)) == [()]
    assert list(permutations_with_composition(Composition((1, 2)))) == []
    for c in (Composition((3, 2)), Composition((2, 2, 1))):
        members = list(permutations_with_composition(c))
        assert members == sorted(members)
        assert len(members) == count_bruteforce(c)
        assert all(peak_composition(w) == c for w in members)


def test_int_classes_partition_the_int_table():
    c = Composition((4, 2))
    classes = int_classes(c)
    m = int_matrix(c)
    for (a, b), members in classes.items():
        assert m.at(a, b) == len(members)
        assert list(members) == sorted(members)
        for w in members:
            assert w[0] == a and w[-1] == b and w[0] > w[1] and w[-2] < w[-1]
    total = sum(m.at(a, b) for a in range(1, 7) for b in range(1, 7))
    assert total == sum(len(v) for v in classes.values())


def test_first_ini_member():
    assert first_ini_member(Composition((2,)), 2) == (1, 2)
    assert first_ini_member(Composition((2, 2)), 4) == (1, 3, 2, 4)
    assert first_ini_member(Composition((2, 2)), 1) is None
    w = first_ini_member(Composition((3, 2)), 5)
    assert w is not None and w[-1] == 5 and w[-2] < w[-1]
    assert peak_composition(w) == Composition((3, 2))
