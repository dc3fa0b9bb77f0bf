from fractions import Fraction

import mpmath
import pytest

from patterngf.asymptotics import (
    asymptotic_count,
    comparison_table,
    leading_term,
    min_positive_root,
    min_root_of_dyck_denominator,
    squarefree_decomposition,
    table_to_csv,
    theta_probe,
)
from patterngf.orthopoly import dyck_denominator
from patterngf.series import expand_rational


class TestSquarefree:
    def test_simple(self):
        [(f, m)] = squarefree_decomposition([1, -2])
        assert m == 1 and f == [Fraction(1), Fraction(-2)]

    def test_square(self):
        out = squarefree_decomposition([1, -4, 4])  # (1 - 2x)^2
        assert len(out) == 1
        f, m = out[0]
        assert m == 2
        # monic normalization of (x - 1/2)
        assert f == [Fraction(-1, 2), Fraction(1)] or f == [
            Fraction(1, 2), Fraction(-1),
        ]

    def test_mixed(self):
        # (1 - x)^2 (1 - 2x)
        poly = [1, -4, 5, -2]
        out = squarefree_decomposition(poly)
        assert sorted(m for _, m in out) == [1, 2]


class TestLeadingTerm:
    def test_pure_geometric_is_exact(self):
        # the estimate formula coincides with the true coefficient of
        # 1/(x - a); compare at the working precision
        est = leading_term([1], [Fraction(-3, 4), 1])
        with mpmath.workprec(128):
            for n in (3, 7):
                expected = -((mpmath.mpf(3) / 4) ** (-n - 1))
                assert abs(est.evaluate(n) / expected - 1) < mpmath.mpf("1e-30")

    def test_doubling_is_exact(self):
        est = leading_term([1, -1], [1, -2])
        assert est.multiplicity == 1
        assert est.root == mpmath.mpf(1) / 2
        for n in (4, 9, 30):
            assert est.evaluate(n) == 2 ** (n - 1)

    def test_double_root_error_shrinks(self):
        est = leading_term([0, 0, 0, 1], [1, -4, 4])
        exact = expand_rational([0, 0, 0, 1], [1, -4, 4], 60)
        errs = {}
        for n in (25, 50):
            e = est.evaluate(n)
            errs[n] = abs(float(e) / float(exact.coefficient(n)) - 1)
        assert errs[50] < 0.05
        assert errs[50] < errs[25]

    def test_rejects_tied_moduli(self):
        with pytest.raises(ValueError, match="tied"):
            leading_term([1], [1, 0, -1])  # roots at +1 and -1

    def test_rejects_negative_dominant_root(self):
        # (1 + 2x)(1 - x): dominant root -1/2
        with pytest.raises(ValueError, match="not a positive real"):
            leading_term([1], [1, 1, -2])

    def test_rejects_complex_pair(self):
        with pytest.raises(ValueError):
            leading_term([1], [1, 0, 1])


class TestClosedFormEstimate:
    def test_exact_collapse_at_k_three(self):
        for n in (1, 2, 10, 33):
            assert asymptotic_count(3, 0, n) == 2 ** (n - 1)

    def test_exact_collapse_at_k_two(self):
        for n in (1, 5, 12):
            assert asymptotic_count(2, 0, n) == 1

    def test_within_twelve_percent_at_k_four(self):
        from patterngf.orthopoly import gf_avoiders_12k

        exact = int(gf_avoiders_12k(4, 10).coefficient(10))
        with mpmath.workprec(128):
            est = asymptotic_count(4, 0, 10)
            assert abs(mpmath.mpf(exact) / est - 1) < 0.12

    def test_rejects_bad_domain(self):
        with pytest.raises(ValueError):
            asymptotic_count(1, 0, 5)
        with pytest.raises(ValueError):
            asymptotic_count(3, -1, 5)

    def test_matches_root_extractor(self):
        for k in range(2, 7):
            est = leading_term(dyck_denominator(k - 1), dyck_denominator(k), 128)
            with mpmath.workprec(128):
                a = est.evaluate(30)
                b = asymptotic_count(k, 0, 30)
                assert abs(a / b - 1) < mpmath.mpf("1e-9")


class TestRoots:
    def test_min_roots_match_trig_constants(self):
        for k in range(2, 9):
            a = min_root_of_dyck_denominator(k, 128)
            with mpmath.workprec(192):
                target = 1 / (4 * mpmath.cos(mpmath.pi / (k + 1)) ** 2)
                assert abs(a - target) < mpmath.mpf("1e-20")

    def test_min_positive_root_simple(self):
        a = min_positive_root([1, -2], 64)
        assert abs(a - mpmath.mpf(1) / 2) < mpmath.mpf("1e-15")

    def test_rejects_rootless(self):
        with pytest.raises(ValueError):
            min_positive_root([5], 64)


class TestTables:
    def test_comparison_rows(self):
        rows = comparison_table(3, 0, 6)
        assert [r[0] for r in rows] == [1, 2, 3, 4, 5, 6]
        assert [r[1] for r in rows] == [1, 2, 4, 8, 16, 32]
        for _, exact, est, ratio in rows:
            assert ratio == mpmath.mpf(exact) / est

    def test_empty_table(self):
        assert comparison_table(3, 1, 0) == []
        assert theta_probe(3, 0, 0) == []

    def test_csv_header(self):
        text = table_to_csv(comparison_table(3, 0, 3))
        lines = text.strip().split("\n")
        assert lines[0] == "n,exact,estimate,ratio"
        assert len(lines) == 4

    def test_theta_ratios_are_exactly_half_at_k_three(self):
        rows = theta_probe(3, 0, 8)
        assert all(ratio == mpmath.mpf(1) / 2 for _, ratio in rows)

    def test_theta_closed_form_matches_oracle_for_small_r(self):
        from patterngf.oracle import census
        from patterngf.permutations import Pattern

        rows = theta_probe(3, 1, 6)
        with mpmath.workprec(53):
            for n, ratio in rows:
                c = census(n, (Pattern((1, 3, 2)),), Pattern.rotated_increasing(3))
                assert ratio == mpmath.mpf(c.count_with(1)) / mpmath.mpf(2) ** n

    def test_theta_oracle_route_for_large_r(self):
        from patterngf.oracle import census
        from patterngf.permutations import Pattern

        # r = 3 >= k, so only the census can supply the counts
        rows = theta_probe(3, 3, 6)
        for n, ratio in rows:
            c = census(n, (Pattern((1, 3, 2)),), Pattern.rotated_increasing(3))
            assert ratio == mpmath.mpf(c.count_with(3)) / mpmath.mpf(2) ** n
