from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from avoid312.errors import InvalidWordError
from avoid312.perm import (
    Mode, PatternQuery, Permutation, avoids_312, consecutive_profile, count_occurrences,
    enumerate_avoiders, ltr_decompose, standardize,
)
from oracles import avoiders_by_filter, catalan_segner, classical_count, consecutive_count

P = Permutation.parse


def perms_of(max_n):
    return st.integers(0, max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1))).map(tuple)
    )


class TestPermutation:
    def test_parse_and_print(self):
        sigma = P("4 3 6 5 2 7 8 1")
        assert tuple(sigma) == (4, 3, 6, 5, 2, 7, 8, 1)
        assert str(sigma) == "4 3 6 5 2 7 8 1"

    def test_empty(self):
        assert P("ε") == P("") == Permutation()
        assert str(Permutation()) == "ε"

    @pytest.mark.parametrize("bad", ["1 1", "0 1", "2 3", "1 x"])
    def test_rejects_non_permutations(self, bad):
        with pytest.raises(InvalidWordError):
            P(bad)


class TestStandardize:
    @pytest.mark.parametrize("word, expected", [
        ((5, 8, 7), (1, 3, 2)),
        ((), ()),
        ((2, 4, 3), (1, 3, 2)),
    ])
    def test_examples(self, word, expected):
        assert standardize(word) == expected

    def test_duplicate_values(self):
        with pytest.raises(InvalidWordError):
            standardize((3, 1, 3))


class TestCountOccurrences:
    def test_worked_examples(self):
        sigma = P("4 3 1 7 2 5 6")
        assert count_occurrences(sigma, PatternQuery.parse("3-1-2")) == 5
        assert count_occurrences(sigma, PatternQuery.parse("312")) == 1
        assert count_occurrences(P("5 2 1 3 4"), PatternQuery.parse("312")) == 0

    def test_pattern_longer_than_sigma(self):
        assert count_occurrences(P("2 1"), PatternQuery.parse("321")) == 0
        assert count_occurrences(Permutation(), PatternQuery.parse("1")) == 0

    def test_overlapping_windows(self):
        assert count_occurrences(P("4 3 2 1"), PatternQuery.parse("321")) == 2

    def test_query_parsing(self):
        q = PatternQuery.parse("1-3-2")
        assert q.mode is Mode.CLASSICAL and q.pattern == (1, 3, 2)
        assert str(q) == "1-3-2"
        assert PatternQuery.parse("132").mode is Mode.CONSECUTIVE

    @pytest.mark.parametrize("pattern", [(3, 1, 2), (1, 2, 3), (2, 1, 3), (2, 1), (1, 3, 2, 4), (4, 1, 3, 2)])
    def test_classical_matches_combinations(self, pattern):
        q = PatternQuery(Permutation(pattern), Mode.CLASSICAL)
        for n in range(7):
            for sigma in permutations(range(1, n + 1)):
                assert count_occurrences(sigma, q) == classical_count(sigma, pattern)

    @given(perms_of(9), st.sampled_from([(1, 2, 3), (1, 3, 2), (2, 3, 1), (3, 1, 2), (2, 1, 4, 3)]))
    def test_consecutive_matches_oracle(self, sigma, pattern):
        q = PatternQuery(Permutation(pattern), Mode.CONSECUTIVE)
        assert count_occurrences(sigma, q) == consecutive_count(sigma, pattern)

    def test_consecutive_at_most_classical(self):
        for n in range(9):
            for sigma in permutations(range(1, n + 1)):
                for pattern in permutations((1, 2, 3)):
                    p = Permutation(pattern)
                    assert count_occurrences(sigma, PatternQuery(p)) <= count_occurrences(
                        sigma, PatternQuery(p, Mode.CLASSICAL))

    @given(perms_of(12).filter(lambda s: len(s) >= 2))
    def test_windows_partition(self, sigma):
        total = sum(
            count_occurrences(sigma, PatternQuery(Permutation(p)))
            for p in permutations((1, 2, 3))
        )
        assert total == max(len(sigma) - 2, 0)
        assert sum(consecutive_profile(sigma, 3).values()) == max(len(sigma) - 2, 0)


class TestLtrDecompose:
    def test_worked_example(self):
        d = ltr_decompose(P("4 3 6 5 2 7 8 1"))
        assert d.blocks == ((4, (3,)), (6, (5, 2)), (7, ()), (8, (1,)))
        assert d.maxima == (4, 6, 7, 8)

    def test_increasing_and_decreasing(self):
        assert ltr_decompose(P("1 2 3")).blocks == ((1, ()), (2, ()), (3, ()))
        assert ltr_decompose(P("3 2 1")).blocks == ((3, (2, 1)),)
        assert ltr_decompose(Permutation()).blocks == ()

    @given(perms_of(10))
    def test_flatten_recovers_source(self, sigma):
        d = ltr_decompose(sigma)
        assert d.flatten() == tuple(sigma)
        assert list(d.maxima) == sorted(d.maxima)

    def test_words_decrease_on_avoiders(self, avoiders_of):
        for n in range(11):
            for sigma in avoiders_of(n):
                for w in ltr_decompose(sigma).words:
                    assert all(a > b for a, b in zip(w, w[1:]))


class TestAvoids312:
    def test_examples(self):
        assert not avoids_312(P("5 2 1 3 4"))
        assert avoids_312(P("4 3 6 5 2 7 8 1"))
        assert avoids_312(Permutation(range(1, 20)))
        assert avoids_312(Permutation())

    def test_matches_classical_count(self):
        for n in range(8):
            for sigma in permutations(range(1, n + 1)):
                assert avoids_312(sigma) == (classical_count(sigma, (3, 1, 2)) == 0)


class TestEnumerateAvoiders:
    def test_n3(self):
        assert [str(s) for s in enumerate_avoiders(3)] == ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 2 1"]

    def test_n0(self):
        assert list(enumerate_avoiders(0)) == [Permutation()]

    def test_n10_count(self):
        assert sum(1 for _ in enumerate_avoiders(10)) == 16796 == catalan_segner(10)

    @pytest.mark.parametrize("n", range(8))
    def test_equals_filtered_permutations(self, n):
        assert list(enumerate_avoiders(n)) == avoiders_by_filter(n)

    def test_n9_equals_filter_by_classical_count(self):
        q = PatternQuery.parse("3-1-2")
        filtered = [p for p in permutations(range(1, 10)) if count_occurrences(p, q) == 0]
        assert list(enumerate_avoiders(9)) == filtered

    def test_negative(self):
        with pytest.raises(ValueError):
            list(enumerate_avoiders(-1))
