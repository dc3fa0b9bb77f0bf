import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from patterngf.permutations import (
    Pattern,
    Permutation,
    avoids,
    count_occurrences,
    find_occurrence,
    left_to_right_minima,
    right_to_left_maxima,
)
from patterngf.util import binomial, catalan


perms = st.integers(min_value=0, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)
patterns = st.integers(min_value=1, max_value=4).flatmap(
    lambda k: st.permutations(list(range(1, k + 1)))
)


class TestPermutationType:
    def test_parse_digit_word(self):
        assert Permutation.parse("74352681").values == (7, 4, 3, 5, 2, 6, 8, 1)

    def test_parse_whitespace(self):
        assert Permutation.parse("7 4 3 5 2 6 8 1").values == (
            7, 4, 3, 5, 2, 6, 8, 1,
        )

    def test_parse_empty(self):
        assert Permutation.parse("").n == 0

    def test_str_small_uses_digit_word(self):
        assert str(Permutation((2, 1))) == "21"

    def test_str_large_uses_whitespace(self):
        pi = Permutation(tuple(range(1, 11)))
        assert str(pi) == "1 2 3 4 5 6 7 8 9 10"
        assert Permutation.parse(str(pi)) == pi

    def test_invalid_values_rejected(self):
        with pytest.raises(ValueError):
            Permutation((1, 3))
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))
        with pytest.raises(ValueError):
            Permutation.parse("10")  # digit word with a zero

    def test_pattern_requires_k_at_least_one(self):
        with pytest.raises(ValueError):
            Pattern(())

    def test_named_patterns(self):
        assert Pattern.increasing(4).values == (1, 2, 3, 4)
        assert Pattern.rotated_increasing(4).values == (2, 3, 4, 1)
        assert Pattern.decreasing_then_max(4).values == (3, 2, 1, 4)
        assert Pattern.decreasing_then_max(2).values == (1, 2)


class TestOccurrences:
    def test_worked_increasing_count(self):
        assert count_occurrences(
            Permutation.parse("74352681"), Pattern.increasing(3)
        ) == 8

    def test_worked_mixed_count(self):
        assert count_occurrences(
            Permutation.parse("58327641"), Pattern((2, 1, 3))
        ) == 7

    def test_decreasing_has_no_ascents(self):
        assert count_occurrences(
            Permutation.parse("321"), Pattern.increasing(2)
        ) == 0

    def test_pattern_longer_than_permutation(self):
        assert count_occurrences(Permutation((1,)), Pattern.increasing(3)) == 0

    def test_empty_permutation_avoids_everything(self):
        assert avoids(Permutation(()), Pattern.increasing(2))

    def test_avoids_examples(self):
        assert avoids(Permutation.parse("74352681"), Pattern((1, 3, 2)))
        assert avoids(Permutation.parse("58327641"), Pattern((1, 2, 3)))
        assert not avoids(Permutation.parse("132"), Pattern((1, 3, 2)))

    def test_find_occurrence_positions(self):
        assert find_occurrence(
            Permutation.parse("132"), Pattern((1, 3, 2))
        ) == (1, 2, 3)
        assert find_occurrence(
            Permutation.parse("74352681"), Pattern((1, 3, 2))
        ) is None

    @given(perms, patterns)
    def test_count_bounded_by_subsets(self, values, pat):
        pi = Permutation(tuple(values))
        sigma = Pattern(tuple(pat))
        count = count_occurrences(pi, sigma)
        assert 0 <= count <= binomial(pi.n, sigma.k)

    @given(perms, patterns)
    def test_avoids_iff_zero_count(self, values, pat):
        pi = Permutation(tuple(values))
        sigma = Pattern(tuple(pat))
        assert avoids(pi, sigma) == (count_occurrences(pi, sigma) == 0)

    def test_exhaustive_consistency_small(self):
        # avoids and count agree on everything up to n = 6, k = 3
        pats = [
            Pattern(p) for p in itertools.permutations((1, 2, 3))
        ]
        for n in range(7):
            for values in itertools.permutations(range(1, n + 1)):
                pi = Permutation(values)
                for sigma in pats:
                    assert avoids(pi, sigma) == (
                        count_occurrences(pi, sigma) == 0
                    )

    def test_brute_force_against_naive_subsets(self):
        # the pruned scan equals the raw order-isomorphism filter
        pi = Permutation.parse("47183265")
        sigma = Pattern((2, 3, 1))
        naive = 0
        v = pi.values
        for combo in itertools.combinations(range(pi.n), 3):
            vals = [v[i] for i in combo]
            rank = sorted(vals)
            rel = tuple(rank.index(x) + 1 for x in vals)
            naive += rel == sigma.values
        assert count_occurrences(pi, sigma) == naive


class TestDecompositions:
    def test_minima_worked_example(self):
        assert [v for _, v in left_to_right_minima(Permutation.parse("74352681"))] == [
            7, 4, 3, 2, 1,
        ]

    def test_minima_monotone_cases(self):
        assert [v for _, v in left_to_right_minima(Permutation.parse("12345"))] == [1]
        assert [v for _, v in left_to_right_minima(Permutation.parse("54321"))] == [
            5, 4, 3, 2, 1,
        ]
        assert left_to_right_minima(Permutation(())) == []

    def test_maxima_worked_example(self):
        assert [v for _, v in right_to_left_maxima(Permutation.parse("58327641"))] == [
            8, 7, 6, 4, 1,
        ]

    def test_maxima_monotone_cases(self):
        assert [v for _, v in right_to_left_maxima(Permutation.parse("54321"))] == [
            5, 4, 3, 2, 1,
        ]
        assert [v for _, v in right_to_left_maxima(Permutation.parse("12345"))] == [5]

    @given(perms)
    def test_minima_are_running_minima(self, values):
        pi = Permutation(tuple(values))
        expected = []
        for i, v in enumerate(pi.values, start=1):
            if all(v < u for u in pi.values[: i - 1]):
                expected.append((i, v))
        assert left_to_right_minima(pi) == expected

    @given(perms)
    def test_maxima_mirror_minima(self, values):
        pi = Permutation(tuple(values))
        n = pi.n
        flipped = Permutation(tuple(n + 1 - v for v in reversed(pi.values)))
        mins = left_to_right_minima(flipped)
        expected = sorted((n + 1 - i, n + 1 - v) for i, v in mins)
        assert right_to_left_maxima(pi) == expected


def test_avoidance_classes_match_catalan():
    for n in range(9):
        from patterngf.oracle import count_avoiders

        a = count_avoiders(n, (Pattern((1, 2, 3)),))
        b = count_avoiders(n, (Pattern((1, 3, 2)),))
        assert a == b == catalan(n)
