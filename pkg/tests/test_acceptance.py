"""Acceptance suite: one test per contract criterion, at full scale.

Each test prints a single pass line when it completes (run pytest with -s
to watch them); a pytest failure marks the criterion failed.
"""

import time

import mpmath

from patterngf import verify
from patterngf.oracle import count_avoiders
from patterngf.orthopoly import (
    gf_avoiders_12k,
    gf_avoiders_23k1,
    gf_avoiders_k1k,
)
from patterngf.permutations import Pattern
from patterngf.util import catalan

CATALAN_PREFIX = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]


def test_criterion_1_bijection_suite():
    started = time.monotonic()
    verify.check_figure_triple()
    verify.check_phi_bijection(9)
    verify.check_psi_bijection(9)
    elapsed = time.monotonic() - started
    assert elapsed < 60, f"bijection suite took {elapsed:.1f}s"
    print(f"criterion 1 (bijection suite, n <= 9, {elapsed:.1f}s): PASS")


def test_criterion_2_statistic_transport():
    verify.check_statistic_transport(9)
    from patterngf.paths import LatticePath, weight_w1, weight_w2

    figure = LatticePath(verify.FIGURE_PATH)
    assert weight_w1(3, figure) == 8
    assert weight_w2(3, figure) == 7
    print("criterion 2 (statistic transport, n <= 9, k in 2..5): PASS")


def test_criterion_3_bivariate_series_vs_census():
    verify.check_cf_vs_census(9)
    from patterngf.series import bivariate_gf_12k, bivariate_gf_k1k

    for maker in (bivariate_gf_12k, bivariate_gf_k1k):
        at_one = maker(3, 9).evaluate_y(1)
        assert list(at_one.coeffs) == CATALAN_PREFIX
    print("criterion 3 (bivariate series vs censuses, n <= 9): PASS")


def test_criterion_4_closed_forms():
    verify.check_closed_forms(9)
    verify.check_avoider_series_identity(12)
    verify.check_stratum_extraction(12)
    print("criterion 4 (closed forms vs oracle; identities; strata): PASS")


def test_criterion_5_appendix_suite():
    verify.check_strip_vs_oracle(12, draws=10)
    verify.check_cf_vs_path_census(12, draws=10)
    verify.check_chebyshev_facts(8)
    print("criterion 5 (strip/continued-fraction/Chebyshev checks): PASS")


def test_criterion_6_asymptotics():
    verify.check_asymptotic_values()
    verify.check_error_decrease()
    verify.check_root_bridge(8)
    print("criterion 6 (asymptotic estimates and root bridge): PASS")


def test_criterion_7_desk_scale_reproducibility():
    from patterngf.bijections import phi, psi
    from patterngf.permutations import Permutation

    # every headline object is exact, finite, and reproduced here:
    # the worked path/permutation triple,
    assert str(phi(Permutation.parse(verify.FIGURE_PERM_132))) == verify.FIGURE_PATH
    assert str(psi(Permutation.parse(verify.FIGURE_PERM_123))) == verify.FIGURE_PATH
    # the three identical avoider series,
    for k in (2, 3, 4, 5):
        assert gf_avoiders_12k(k, 12) == gf_avoiders_23k1(k, 12) == (
            gf_avoiders_k1k(k, 12)
        )
    # the exact estimate collapses,
    from patterngf.asymptotics import asymptotic_count

    assert asymptotic_count(3, 0, 25) == 2 ** 24
    assert asymptotic_count(2, 0, 25) == 1
    # and both avoidance classes are Catalan-counted, through n = 10.
    for n in range(11):
        a = count_avoiders(n, (Pattern((1, 3, 2)),))
        b = count_avoiders(n, (Pattern((1, 2, 3)),))
        assert a == b == catalan(n), n
    print("criterion 7 (desk-scale reproducibility, n <= 10): PASS")
