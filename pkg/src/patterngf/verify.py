"""Self-verification suites: every formula against the brute-force oracle.

Each check either returns normally or raises AssertionError with a message;
:func:`run_suite` wraps them into pass/fail results for the command line.
The acceptance tests call the same functions at their contractual scales.

Randomized checks draw small rational weights from a fixed seed, so runs
are deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import oracle
from .asymptotics import (
    asymptotic_count,
    leading_term,
    min_root_of_dyck_denominator,
)
from .bijections import phi, phi_inverse, phi_via_minima, psi, psi_inverse
from .orthopoly import (
    PolySystem,
    chebyshev_u,
    dyck_denominator,
    dyck_system,
    gf_avoiders_12k,
    gf_avoiders_23k1,
    gf_avoiders_k1k,
    gf_exactly_r_12k,
    gf_exactly_r_23k1,
    gf_exactly_r_k1k,
    poly_add,
    poly_mul,
    strip_gf,
)
from .paths import LatticePath, WeightSpec, enumerate_paths, weight_w1, weight_w2
from .permutations import Pattern, Permutation, count_occurrences
from .series import (
    TruncatedSeries,
    YPolynomial,
    bivariate_gf_12k,
    bivariate_gf_k1k,
    cf_motzkin,
    cf_peaked_dyck,
)
from .util import catalan

PATTERN_132 = Pattern((1, 3, 2))
PATTERN_123 = Pattern((1, 2, 3))

FIGURE_PERM_132 = "74352681"
FIGURE_PERM_123 = "58327641"
FIGURE_PATH = "UUDUUUDUDDUDDDUD"

_SEED = 991

K_RANGE = (2, 3, 4, 5)


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _avoiders(n: int, pattern: Pattern) -> list[Permutation]:
    return [
        Permutation(v) for v in oracle.avoiding_permutations(n, (pattern,))
    ]


# ----------------------------------------------------------------- bijections


def check_figure_triple(max_n: int = 9) -> None:
    """The worked example: one path, its two permutations, both weights."""
    pi132 = Permutation.parse(FIGURE_PERM_132)
    pi123 = Permutation.parse(FIGURE_PERM_123)
    path = LatticePath(FIGURE_PATH)
    assert str(phi(pi132)) == FIGURE_PATH
    assert str(phi_via_minima(pi132)) == FIGURE_PATH
    assert phi_inverse(path) == pi132
    assert str(psi(pi123)) == FIGURE_PATH
    assert psi_inverse(path) == pi123
    assert weight_w1(3, path) == 8
    assert weight_w2(3, path) == 7
    assert count_occurrences(pi132, Pattern.increasing(3)) == 8
    assert count_occurrences(pi123, Pattern((2, 1, 3))) == 7


def check_phi_bijection(max_n: int = 9) -> None:
    """phi is a bijection from 132-avoiders of S_n onto the closed Dyck
    paths of length 2n, agrees with the minima construction, and round
    trips."""
    for n in range(max_n + 1):
        images = set()
        for pi in _avoiders(n, PATTERN_132):
            p = phi(pi)
            assert p == phi_via_minima(pi), f"constructions disagree on {pi}"
            assert phi_inverse(p) == pi, f"round trip fails on {pi}"
            images.add(p.steps)
        paths = {p.steps for p in enumerate_paths(2 * n, "dyck")}
        assert images == paths, f"phi not onto at n={n}"


def check_psi_bijection(max_n: int = 9) -> None:
    """psi is a bijection from 123-avoiders of S_n onto the closed Dyck
    paths of length 2n and round trips."""
    for n in range(max_n + 1):
        images = set()
        for pi in _avoiders(n, PATTERN_123):
            p = psi(pi)
            assert psi_inverse(p) == pi, f"round trip fails on {pi}"
            images.add(p.steps)
        paths = {p.steps for p in enumerate_paths(2 * n, "dyck")}
        assert images == paths, f"psi not onto at n={n}"


def check_statistic_transport(max_n: int = 9) -> None:
    """Counting a pattern in the permutation equals weighing its path:
    increasing patterns through phi and down-step heights, and
    decreasing-then-max patterns through psi and peak heights."""
    top = min(max_n, 9)
    for n in range(top + 1):
        for pi in _avoiders(n, PATTERN_132):
            p = phi(pi)
            for k in K_RANGE:
                assert count_occurrences(pi, Pattern.increasing(k)) == weight_w1(
                    k, p
                ), f"transport fails: {pi}, k={k}"
        for pi in _avoiders(n, PATTERN_123):
            p = psi(pi)
            for k in K_RANGE:
                assert count_occurrences(
                    pi, Pattern.decreasing_then_max(k)
                ) == weight_w2(k, p), f"transport fails: {pi}, k={k}"


# --------------------------------------------------------------------- series


def _histogram_of(coeff) -> dict[int, int]:
    if isinstance(coeff, YPolynomial):
        return dict(coeff.terms)
    return {0: coeff} if coeff else {}


def check_cf_vs_census(max_n: int = 9) -> None:
    """The two bivariate continued fractions match the exhaustive censuses
    coefficient-for-coefficient, and collapse to Catalan at y = 1."""
    top = min(max_n, 9)
    for k in K_RANGE:
        b12 = bivariate_gf_12k(k, top)
        bk1 = bivariate_gf_k1k(k, top)
        for n in range(top + 1):
            c132 = oracle.census(n, (PATTERN_132,), Pattern.increasing(k))
            assert _histogram_of(b12.coefficient(n)) == c132.histogram, (
                f"12..k census mismatch at n={n}, k={k}"
            )
            c123 = oracle.census(
                n, (PATTERN_123,), Pattern.decreasing_then_max(k)
            )
            assert _histogram_of(bk1.coefficient(n)) == c123.histogram, (
                f"(k-1)..1k census mismatch at n={n}, k={k}"
            )
        at_one = b12.evaluate_y(1)
        at_one_k1 = bk1.evaluate_y(1)
        for n in range(top + 1):
            assert at_one.coefficient(n) == catalan(n)
            assert at_one_k1.coefficient(n) == catalan(n)


def check_closed_forms(max_n: int = 9) -> None:
    """Every closed-form series agrees with the oracle histogram over its
    stated (k, r) hypotheses."""
    top = min(max_n, 9)
    for k in K_RANGE:
        av12 = gf_avoiders_12k(k, top)
        ex12 = {r: gf_exactly_r_12k(k, r, top) for r in range(1, 7)}
        av23 = gf_avoiders_23k1(k, top)
        ex23 = (
            {r: gf_exactly_r_23k1(k, r, top) for r in range(1, k)}
            if k >= 3
            else {}
        )
        avk1 = gf_avoiders_k1k(k, top)
        exk1 = {r: gf_exactly_r_k1k(k, r, top) for r in range(1, k)}
        for n in range(top + 1):
            c12 = oracle.census(n, (PATTERN_132,), Pattern.increasing(k))
            assert av12.coefficient(n) == c12.count_with(0), (n, k)
            for r, s in ex12.items():
                assert s.coefficient(n) == c12.count_with(r), (n, k, r)
            c23 = oracle.census(
                n, (PATTERN_132,), Pattern.rotated_increasing(k)
            )
            assert av23.coefficient(n) == c23.count_with(0), (n, k)
            for r, s in ex23.items():
                assert s.coefficient(n) == c23.count_with(r), (n, k, r)
            ck1 = oracle.census(
                n, (PATTERN_123,), Pattern.decreasing_then_max(k)
            )
            assert avk1.coefficient(n) == ck1.count_with(0), (n, k)
            for r, s in exk1.items():
                assert s.coefficient(n) == ck1.count_with(r), (n, k, r)


def check_avoider_series_identity(max_n: int = 12) -> None:
    """The three avoider series are one and the same series."""
    order = max(max_n, 12)
    for k in K_RANGE:
        a = gf_avoiders_12k(k, order)
        b = gf_avoiders_23k1(k, order)
        c = gf_avoiders_k1k(k, order)
        assert a == b == c, f"avoider series differ at k={k}"


def check_stratum_extraction(max_n: int = 12) -> None:
    """Slicing the bivariate series at a fixed power of y reproduces the
    fixed-count closed forms; the y = 0 slice reproduces the avoiders."""
    order = max(max_n, 12)
    for k in (3, 4):
        b12 = bivariate_gf_12k(k, order)
        assert b12.evaluate_y(0) == gf_avoiders_12k(k, order)
        for r in range(1, 7):
            assert b12.y_coefficient(r) == gf_exactly_r_12k(k, r, order), (
                k,
                r,
            )
        bk1 = bivariate_gf_k1k(k, order)
        assert bk1.evaluate_y(0) == gf_avoiders_k1k(k, order)
        for r in range(1, k):
            assert bk1.y_coefficient(r) == gf_exactly_r_k1k(k, r, order), (
                k,
                r,
            )


# ------------------------------------------------------------------- appendix


def _random_weight(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 5), rng.randint(1, 5))


def check_strip_vs_oracle(max_n: int = 12, draws: int = 10) -> None:
    """The strip series equals both a transfer-style dynamic program and
    the exhaustive weighted path census on random rational weights."""
    length_cap = min(max_n, 12)
    rng = random.Random(_SEED)
    for _ in range(draws):
        K = rng.randint(1, 4)
        b = {h: _random_weight(rng) for h in range(K + 1)}
        lam = {h: _random_weight(rng) for h in range(1, K + 1)}
        spec = WeightSpec(level_weights=b, down_weights=lam)
        sys = PolySystem(lambda i: b[i], lambda i: lam[i])
        for r in range(K + 1):
            for s in range(K + 1):
                series = strip_gf(sys, K, r, s, length_cap)
                for m in range(length_cap + 1):
                    dp = oracle.bounded_weight_sum(m, spec, K, r, s)
                    assert series.coefficient(m) == dp, (K, r, s, m)
                enum_cap = length_cap if (r, s) == (0, 0) else 8
                for m in range(enum_cap + 1):
                    total = oracle.path_census(
                        m,
                        spec,
                        kind="motzkin",
                        max_height=K,
                        from_height=r,
                        to_height=s,
                    )
                    assert series.coefficient(m) == total, (K, r, s, m)


def check_cf_vs_path_census(max_n: int = 12, draws: int = 10) -> None:
    """Both continued fractions agree with the exhaustive weighted path
    census on random rational weights."""
    length_cap = min(max_n, 12)
    rng = random.Random(_SEED + 1)
    for _ in range(draws):
        heights = length_cap + 2
        b = {h: _random_weight(rng) for h in range(heights)}
        lam = {h: _random_weight(rng) for h in range(1, heights)}
        nu = {h: _random_weight(rng) for h in range(1, heights)}
        motzkin = cf_motzkin(
            lambda h: TruncatedSeries([0, b[h]], length_cap),
            lambda h: TruncatedSeries([0, 0, lam[h]], length_cap),
            length_cap,
        )
        spec = WeightSpec(level_weights=b, down_weights=lam)
        for m in range(length_cap + 1):
            total = oracle.path_census(m, spec, kind="motzkin")
            assert motzkin.coefficient(m) == total, f"motzkin length {m}"
        semi_cap = length_cap // 2
        peaked = cf_peaked_dyck(
            lambda h: TruncatedSeries([0, nu[h]], semi_cap),
            lambda h: TruncatedSeries([0, lam[h]], semi_cap),
            semi_cap,
        )
        peak_spec = WeightSpec(down_weights=lam, peak_weights=nu)
        for m in range(semi_cap + 1):
            total = oracle.path_census(2 * m, peak_spec, kind="dyck")
            assert peaked.coefficient(m) == total, f"peaked semilength {m}"


def _poly_compose(outer: list, inner: list) -> list:
    acc: list = [Fraction(0)]
    for c in reversed(outer):
        acc = poly_add(poly_mul(acc, inner), [Fraction(c)])
    while len(acc) > 1 and not acc[-1]:
        acc.pop()
    return acc


def check_chebyshev_facts(max_n: int = 8) -> None:
    """The flat-weight recurrences produce Chebyshev-U values, the
    reciprocal recurrence matches coefficient reversal, and the integer
    normalization interleaves into the flat reciprocal polynomials."""
    top = min(max_n, 8)
    flat = dyck_system()
    with_level = PolySystem(lambda i: 1, lambda i: 1)
    half_x = [Fraction(0), Fraction(1, 2)]
    shifted_half = [Fraction(-1, 2), Fraction(1, 2)]
    for n in range(top + 1):
        u = chebyshev_u(n)
        assert flat.poly(n) == _poly_compose(u, half_x), f"flat weights, n={n}"
        assert with_level.poly(n) == _poly_compose(u, shifted_half), (
            f"unit level weights, n={n}"
        )
    rng = random.Random(_SEED + 2)
    b = {i: _random_weight(rng) for i in range(14)}
    lam = {i: _random_weight(rng) for i in range(14)}
    noisy = PolySystem(lambda i: b[i], lambda i: lam[i])
    noisy.reciprocal_poly(12)  # asserts reversal identity internally
    for n in range(13):
        star = flat.reciprocal_poly(n)
        d = dyck_denominator(n)
        assert all(c == 0 for c in star[1::2]), "odd coefficients must vanish"
        assert star[0::2] == d, f"denominator bridge fails at n={n}"


# ---------------------------------------------------------------- asymptotics


def check_asymptotic_values(max_n: int = 40) -> None:
    """Bit-exact collapse of the estimate where the constants are rational,
    and the advertised accuracy at small n."""
    for n in (1, 5, 20, 40):
        assert asymptotic_count(3, 0, n) == 2 ** (n - 1)
        assert asymptotic_count(2, 0, n) == 1
    exact = int(gf_avoiders_12k(4, 10).coefficient(10))
    with mpmath.workprec(128):
        est = asymptotic_count(4, 0, 10)
        assert abs(mpmath.mpf(exact) / est - 1) < 0.12


def check_error_decrease(max_n: int = 40) -> None:
    """Relative error of the estimate shrinks from n = 20 to n = 40 and is
    below 15% at n = 40.  The (k=3, r=0) cell is exactly zero at both, so
    the decrease there is the degenerate equality."""
    for k in (3, 4):
        for r in (0, 1, 2):
            series = (
                gf_avoiders_12k(k, 40)
                if r == 0
                else gf_exactly_r_12k(k, r, 40)
            )
            with mpmath.workprec(192):
                errs = {}
                for n in (20, 40):
                    exact = int(series.coefficient(n))
                    est = asymptotic_count(k, r, n, precision=192)
                    errs[n] = abs(mpmath.mpf(exact) / est - 1)
                both_zero = errs[20] == 0 and errs[40] == 0
                assert both_zero or errs[40] < errs[20], (k, r)
                assert errs[40] < 0.15, (k, r)


def check_root_bridge(max_n: int = 8) -> None:
    """The smallest root of each bounded-height denominator equals the
    closed trigonometric constant to 1e-20."""
    for k in range(2, max(max_n, 8) + 1):
        a = min_root_of_dyck_denominator(k, 128)
        with mpmath.workprec(192):
            target = 1 / (4 * mpmath.cos(mpmath.pi / (k + 1)) ** 2)
            assert abs(a - target) < mpmath.mpf("1e-20"), f"k={k}"


def check_leading_term_consistency(max_n: int = 8) -> None:
    """The generic root-based extractor reproduces the closed trigonometric
    constant for the avoider series."""
    for k in range(2, 7):
        est = leading_term(dyck_denominator(k - 1), dyck_denominator(k), 128)
        with mpmath.workprec(128):
            a = est.evaluate(30)
            b = asymptotic_count(k, 0, 30)
            assert abs(a / b - 1) < mpmath.mpf("1e-9"), f"k={k}"


# --------------------------------------------------------------------- suites

SUITES: dict[str, list[tuple[str, object]]] = {
    "bijections": [
        ("figure-triple", check_figure_triple),
        ("phi-bijection", check_phi_bijection),
        ("psi-bijection", check_psi_bijection),
        ("statistic-transport", check_statistic_transport),
    ],
    "series": [
        ("cf-vs-census", check_cf_vs_census),
        ("closed-forms-vs-census", check_closed_forms),
        ("avoider-series-identity", check_avoider_series_identity),
        ("stratum-extraction", check_stratum_extraction),
    ],
    "appendix": [
        ("strip-vs-oracle", check_strip_vs_oracle),
        ("cf-vs-path-census", check_cf_vs_path_census),
        ("chebyshev-facts", check_chebyshev_facts),
    ],
    "asymptotics": [
        ("closed-values", check_asymptotic_values),
        ("error-decrease", check_error_decrease),
        ("root-bridge", check_root_bridge),
        ("leading-term-consistency", check_leading_term_consistency),
    ],
}


def run_suite(suite: str, max_n: int = 9) -> list[CheckResult]:
    """Run one named suite (or 'all'); collect pass/fail per check."""
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    for name in names:
        for check_name, fn in SUITES[name]:
            try:
                fn(max_n)
            except AssertionError as exc:
                results.append(
                    CheckResult(name, check_name, False, str(exc))
                )
            else:
                results.append(CheckResult(name, check_name, True))
    return results
