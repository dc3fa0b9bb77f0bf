import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from patterngf.bijections import (
    PATTERN_123,
    PATTERN_132,
    PatternViolationError,
    convert_123_to_132,
    phi,
    phi_inverse,
    phi_via_minima,
    psi,
    psi_inverse,
)
from patterngf.oracle import avoiding_permutations
from patterngf.paths import LatticePath, enumerate_paths, peaks
from patterngf.permutations import (
    Pattern,
    Permutation,
    avoids,
    count_occurrences,
)
from patterngf.util import catalan

FIGURE_PATH = "UUDUUUDUDDUDDDUD"


def avoiders(n, pattern):
    return [Permutation(v) for v in avoiding_permutations(n, (pattern,))]


_PATH_POOL = {}


def closed_paths(n):
    if n not in _PATH_POOL:
        _PATH_POOL[n] = list(enumerate_paths(2 * n, "dyck"))
    return _PATH_POOL[n]


closed_dyck = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.builds(
        lambda i: closed_paths(n)[i],
        st.integers(min_value=0, max_value=catalan(n) - 1),
    )
)


class TestPhi:
    def test_worked_example(self):
        assert str(phi(Permutation.parse("74352681"))) == FIGURE_PATH

    def test_singleton(self):
        assert str(phi(Permutation.parse("1"))) == "UD"

    def test_two_element_descent(self):
        assert str(phi(Permutation.parse("21"))) == "UDUD"

    def test_empty(self):
        assert str(phi(Permutation(()))) == ""

    def test_rejects_with_witness(self):
        with pytest.raises(PatternViolationError) as exc:
            phi(Permutation.parse("132"))
        assert exc.value.positions == (1, 2, 3)
        assert "132" in str(exc.value)

    def test_rejects_embedded_occurrence(self):
        with pytest.raises(PatternViolationError) as exc:
            phi(Permutation.parse("2143"))
        assert exc.value.positions == (1, 3, 4)

    def test_via_minima_worked_example(self):
        assert str(phi_via_minima(Permutation.parse("74352681"))) == FIGURE_PATH

    def test_via_minima_decreasing(self):
        assert str(phi_via_minima(Permutation.parse("321"))) == "UDUDUD"

    def test_via_minima_rejects(self):
        with pytest.raises(PatternViolationError):
            phi_via_minima(Permutation.parse("132"))

    def test_both_constructions_agree(self):
        for n in range(8):
            for pi in avoiders(n, PATTERN_132):
                assert phi(pi) == phi_via_minima(pi)


class TestPhiInverse:
    def test_worked_example(self):
        assert phi_inverse(LatticePath(FIGURE_PATH)) == Permutation.parse(
            "74352681"
        )

    def test_simple_paths(self):
        assert phi_inverse(LatticePath("UD")) == Permutation((1,))
        assert phi_inverse(LatticePath("UUDD")) == Permutation((1, 2))

    def test_rejects_open_paths(self):
        with pytest.raises(ValueError):
            phi_inverse(LatticePath("UU"))
        with pytest.raises(ValueError):
            phi_inverse(LatticePath("ULD"))

    def test_roundtrip_and_bijectivity(self):
        for n in range(8):
            images = set()
            for pi in avoiders(n, PATTERN_132):
                p = phi(pi)
                assert phi_inverse(p) == pi
                images.add(p.steps)
            assert images == {p.steps for p in closed_paths(n)}

    @given(closed_dyck)
    def test_inverse_lands_in_avoiders(self, path):
        pi = phi_inverse(path)
        assert avoids(pi, PATTERN_132)
        assert phi(pi) == path


class TestPsi:
    def test_worked_example(self):
        assert str(psi(Permutation.parse("58327641"))) == FIGURE_PATH

    def test_singleton(self):
        assert str(psi(Permutation.parse("1"))) == "UD"

    def test_increasing_pair(self):
        assert str(psi(Permutation.parse("12"))) == "UUDD"

    def test_rejects_with_witness(self):
        with pytest.raises(PatternViolationError) as exc:
            psi(Permutation.parse("123"))
        assert exc.value.positions == (1, 2, 3)

    def test_roundtrip_and_bijectivity(self):
        for n in range(8):
            images = set()
            for pi in avoiders(n, PATTERN_123):
                p = psi(pi)
                assert psi_inverse(p) == pi
                images.add(p.steps)
            assert images == {p.steps for p in closed_paths(n)}

    @given(closed_dyck)
    def test_inverse_lands_in_avoiders(self, path):
        pi = psi_inverse(path)
        assert avoids(pi, PATTERN_123)
        assert psi(pi) == path

    def test_psi_inverse_of_sawtooth(self):
        # the unique 123-avoider of S_2 mapping to UDUD
        assert psi_inverse(LatticePath("UDUD")) == Permutation((2, 1))


class TestConversion:
    def test_worked_example(self):
        assert convert_123_to_132(Permutation.parse("58327641")) == (
            Permutation.parse("74352681")
        )

    def test_fixed_points(self):
        assert convert_123_to_132(Permutation((1,))) == Permutation((1,))
        assert convert_123_to_132(Permutation((2, 1))) == Permutation((2, 1))

    def test_is_bijection_between_classes(self):
        for n in range(7):
            images = set()
            for pi in avoiders(n, PATTERN_123):
                out = convert_123_to_132(pi)
                assert avoids(out, PATTERN_132)
                images.add(out.values)
            assert len(images) == catalan(n)


class TestStatisticTransport:
    def test_increasing_patterns_through_phi(self):
        from patterngf.paths import weight_w1

        for n in range(7):
            for pi in avoiders(n, PATTERN_132):
                p = phi(pi)
                for k in (2, 3, 4, 5):
                    assert count_occurrences(
                        pi, Pattern.increasing(k)
                    ) == weight_w1(k, p)

    def test_decreasing_then_max_through_psi(self):
        from patterngf.paths import weight_w2

        for n in range(7):
            for pi in avoiders(n, PATTERN_123):
                p = psi(pi)
                for k in (2, 3, 4, 5):
                    assert count_occurrences(
                        pi, Pattern.decreasing_then_max(k)
                    ) == weight_w2(k, p)


def _longest_increasing_from(values, j):
    n = len(values)
    best = [1] * n
    for i in range(n - 1, -1, -1):
        for t in range(i + 1, n):
            if values[t] > values[i]:
                best[i] = max(best[i], 1 + best[t])
    return best[j]


class TestStructureLemmas:
    def test_down_step_heights_are_increasing_run_lengths(self):
        # the j-th down-step starts at the length of the longest increasing
        # subsequence beginning at position j
        for n in range(8):
            for pi in avoiders(n, PATTERN_132):
                p = phi(pi)
                starts = []
                h = 0
                for s in p.steps:
                    if s == "U":
                        h += 1
                    else:
                        starts.append(h)
                        h -= 1
                for j in range(n):
                    assert starts[j] == _longest_increasing_from(pi.values, j)

    def test_peak_heights_are_smaller_left_counts(self):
        # peaks of psi(pi) at height i pair off with right-to-left maxima
        # having i - 1 smaller elements to their left, and those elements
        # descend (a maximal decreasing-then-max occurrence)
        from patterngf.permutations import right_to_left_maxima

        for n in range(8):
            for pi in avoiders(n, PATTERN_123):
                p = psi(pi)
                peak_heights = sorted(h for _, h in peaks(p))
                witness_heights = []
                for pos, value in right_to_left_maxima(pi):
                    smaller_left = [
                        v for v in pi.values[: pos - 1] if v < value
                    ]
                    assert smaller_left == sorted(smaller_left, reverse=True)
                    witness_heights.append(1 + len(smaller_left))
                assert sorted(witness_heights) == peak_heights

    def test_rotated_pattern_containment_reads_off_path(self):
        # pi contains 23..k1 exactly when some up-step of phi(pi) from
        # height h was preceded by a visit to height >= h + k - 1
        for n in range(8):
            for pi in avoiders(n, PATTERN_132):
                p = phi(pi)
                prof = (0,) + p.heights()
                for k in (3, 4):
                    seen = False
                    high = prof[0]
                    for idx, s in enumerate(p.steps):
                        if s == "U" and high >= prof[idx] + k - 1:
                            seen = True
                            break
                        high = max(high, prof[idx + 1])
                    assert seen == (
                        not avoids(pi, Pattern.rotated_increasing(k))
                    )
