"""Leading-term asymptotics for rational generating functions.

Given f(x)/D(x) with D(a) = 0 at a unique minimum-modulus root a > 0 of
multiplicity R (all other roots strictly larger in modulus), the n-th
series coefficient behaves like

    (-1)**R * n**(R-1)/(R-1)! * a**(-n-R) * f(a)/g(a) * (1 + O(1/n)),

where g(x) = D(x)/(x - a)**R.  :func:`leading_term` verifies the root
hypothesis numerically (exact square-free factorization plus high-precision
root finding, then sign-change bisection for the final refinement) and
packages the estimate.

:func:`asymptotic_count` evaluates the closed trigonometric estimate for
the number of 132-avoiding permutations with exactly r occurrences of the
increasing pattern of length k — the same value also estimates the
123-avoiding count for the (k-1)(k-2)...1k pattern.  The constants are
taken exactly when 4*cos(pi/(k+1))**2 is rational (k in {2, 3, 5}), so the
k = 2 and k = 3 values are bit-exact.

All numerics run at an explicit binary precision (default 128 bits);
nothing here touches the exact-series modules' arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import mpmath
from mpmath import mpf

from .orthopoly import dyck_denominator, poly_eval
from .series import TruncatedSeries

Scalar = Union[int, Fraction]

DEFAULT_PRECISION = 128

#: Exact values of (4*sin(pi/(k+1))**2, 4*cos(pi/(k+1))**2) where rational.
_EXACT_TRIG: dict[int, tuple[Fraction, Fraction]] = {
    2: (Fraction(3), Fraction(1)),
    3: (Fraction(2), Fraction(2)),
    5: (Fraction(1), Fraction(3)),
}


def _poly_derivative(p: Sequence[Scalar]) -> list[Scalar]:
    return [i * c for i, c in enumerate(p)][1:] or [0]


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = [Fraction(c) for c in a]
    b = [Fraction(c) for c in b]
    if len(b) == 1:
        return [c / b[0] for c in a], [Fraction(0)]
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = a[:]
    for i in range(len(a) - len(b), -1, -1):
        coef = r[i + len(b) - 1] / b[-1]
        q[i] = coef
        if coef:
            for j, bc in enumerate(b):
                r[i + j] -= coef * bc
    while len(r) > 1 and not r[-1]:
        r.pop()
    return q, r


def _poly_gcd(a: Sequence[Scalar], b: Sequence[Scalar]) -> list[Fraction]:
    x = [Fraction(c) for c in a]
    y = [Fraction(c) for c in b]
    while len(y) > 1 or y[0]:
        _, rem = _poly_divmod(x, y)
        x, y = y, rem
    # normalize monic
    if x[-1] != 1:
        x = [c / x[-1] for c in x]
    return x


def squarefree_decomposition(
    poly: Sequence[Scalar],
) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm over the rationals: factors (square-free, monic-ish)
    with their multiplicities, product recovering poly up to a constant."""
    f = [Fraction(c) for c in poly]
    while len(f) > 1 and not f[-1]:
        f.pop()
    if len(f) <= 1:
        raise ValueError("constant polynomial has no roots to decompose")
    df = _poly_derivative(f)
    g = _poly_gcd(f, df)
    if len(g) == 1:
        return [(f, 1)]
    w, _ = _poly_divmod(f, g)
    y, _ = _poly_divmod(df, g)
    z = [a - b for a, b in zip(y, _poly_derivative(w) + [Fraction(0)] * len(y))]
    while len(z) > 1 and not z[-1]:
        z.pop()
    out: list[tuple[list[Fraction], int]] = []
    i = 1
    while len(w) > 1:
        gg = _poly_gcd(w, z)
        if len(gg) > 1:
            out.append((gg, i))
        w, _ = _poly_divmod(w, gg)
        y, _ = _poly_divmod(z, gg)
        z = [
            a - b
            for a, b in zip(y, _poly_derivative(w) + [Fraction(0)] * len(y))
        ]
        while len(z) > 1 and not z[-1]:
            z.pop()
        i += 1
    return out


def _mp_poly_eval(p: Sequence[Scalar], x: mpf) -> mpf:
    acc = mpf(0)
    for c in reversed(list(p)):
        acc = acc * x + (
            mpf(c.numerator) / c.denominator if isinstance(c, Fraction) else mpf(c)
        )
    return acc


def _bisect_root(
    poly: Sequence[Scalar], lo: mpf, hi: mpf, precision: int
) -> mpf:
    """Refine a bracketed simple root by sign-change bisection."""
    flo = _mp_poly_eval(poly, lo)
    fhi = _mp_poly_eval(poly, hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if mpmath.sign(flo) == mpmath.sign(fhi):
        raise ValueError("no sign change on the bracketing interval")
    for _ in range(precision + 16):
        mid = (lo + hi) / 2
        fmid = _mp_poly_eval(poly, mid)
        if fmid == 0:
            return mid
        if mpmath.sign(fmid) == mpmath.sign(flo):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


@dataclass(frozen=True)
class AsymptoticEstimate:
    """Leading-term data for a rational series: minimal positive root of
    the denominator, its multiplicity, and the constant f(a)/g(a)."""

    root: mpf
    multiplicity: int
    constant: mpf
    precision: int

    def evaluate(self, n: int) -> mpf:
        """The estimate at index n."""
        with mpmath.workprec(self.precision):
            r = self.multiplicity
            return (
                mpf(-1) ** r
                * mpf(n) ** (r - 1)
                / math.factorial(r - 1)
                * self.root ** (-n - r)
                * self.constant
            )


def leading_term(
    numerator: Sequence[Scalar],
    denominator: Sequence[Scalar],
    precision: int = DEFAULT_PRECISION,
) -> AsymptoticEstimate:
    """Extract the leading coefficient asymptotics of numerator/denominator.

    The denominator must have a unique minimum-modulus root, and that root
    must be real and positive; otherwise the input is rejected with a
    message naming the failure.
    """
    with mpmath.workprec(precision + 32):
        factors = squarefree_decomposition(denominator)
        roots: list[tuple[mpf, mpf, int]] = []  # (modulus, root, multiplicity)
        for factor, mult in factors:
            if len(factor) <= 1:
                continue
            coeffs_desc = [
                mpf(c.numerator) / c.denominator for c in reversed(factor)
            ]
            found = mpmath.polyroots(
                coeffs_desc, maxsteps=200, extraprec=precision
            )
            for root in found:
                roots.append((abs(root), root, mult))
        if not roots:
            raise ValueError("denominator has no roots")
        roots.sort(key=lambda item: item[0])
        a_mod, a_root, mult = roots[0]
        tol = mpf(2) ** (-precision // 2) * (1 + a_mod)
        if len(roots) > 1 and roots[1][0] - a_mod < tol:
            raise ValueError(
                "tied minimum-modulus roots: leading-term extraction "
                "needs a unique dominant singularity"
            )
        if abs(mpmath.im(a_root)) > tol or mpmath.re(a_root) <= 0:
            raise ValueError(
                "minimum-modulus root is not a positive real number"
            )
        # refine on the square-free factor that owns the root
        candidates = [factor for factor, m in factors if m == mult]
        owner = min(
            candidates,
            key=lambda factor: abs(_mp_poly_eval(factor, mpmath.re(a_root))),
        )
        center = mpmath.re(a_root)
        delta = max(a_mod * mpf(2) ** -12, mpf(2) ** -40)
        a = None
        for _ in range(8):
            try:
                a = _bisect_root(owner, center - delta, center + delta, precision)
                break
            except ValueError:
                delta /= 16
        if a is None:
            raise ValueError("could not isolate the dominant root by bisection")
        # g(a) = D^(R)(a) / R!  where D = (x - a)^R g(x)
        deriv = [Fraction(c) for c in denominator]
        for _ in range(mult):
            deriv = _poly_derivative(deriv)
        g_at_a = _mp_poly_eval(deriv, a) / math.factorial(mult)
        f_at_a = _mp_poly_eval(numerator, a)
        return AsymptoticEstimate(
            root=a,
            multiplicity=mult,
            constant=f_at_a / g_at_a,
            precision=precision,
        )


def min_positive_root(
    poly: Sequence[Scalar], precision: int = DEFAULT_PRECISION
) -> mpf:
    """Smallest positive real root of a polynomial with simple positive
    roots, by segment scan and sign-change bisection."""
    with mpmath.workprec(precision + 32):
        coeffs = [Fraction(c) for c in poly]
        while len(coeffs) > 1 and not coeffs[-1]:
            coeffs.pop()
        if len(coeffs) <= 1:
            raise ValueError("constant polynomial has no roots")
        bound = 1 + max(abs(c) for c in coeffs[:-1]) / abs(coeffs[-1])
        hi = mpf(bound.numerator) / bound.denominator
        segments = 4096
        prev_x = mpf(0)
        prev_sign = mpmath.sign(_mp_poly_eval(coeffs, prev_x))
        for i in range(1, segments + 1):
            x = hi * i / segments
            val = _mp_poly_eval(coeffs, x)
            if val == 0:
                return x
            sign = mpmath.sign(val)
            if sign != prev_sign:
                return _bisect_root(coeffs, prev_x, x, precision)
            prev_x, prev_sign = x, sign
        raise ValueError("no positive real root found below the root bound")


def min_root_of_dyck_denominator(
    k: int, precision: int = DEFAULT_PRECISION
) -> mpf:
    """Smallest root of dyck_denominator(k); tends to 1/(4 cos(pi/(k+1))^2)."""
    return min_positive_root(dyck_denominator(k), precision)


def asymptotic_count(
    k: int, r: int, n: int, precision: int = DEFAULT_PRECISION
) -> mpf:
    """Closed-form estimate for the number of 132-avoiding permutations of
    size n with exactly r occurrences of the increasing pattern of length
    k; equally the estimate for 123-avoiders against (k-1)(k-2)...1k.

    (4 sin^2(pi/(k+1)) / (k+1))**(r+1) * n**r / r! * (4 cos^2(pi/(k+1)))**(n-r)
    """
    if k < 2 or r < 0:
        raise ValueError("need k >= 2 and r >= 0")
    with mpmath.workprec(precision):
        if k in _EXACT_TRIG:
            s2_frac, c2_frac = _EXACT_TRIG[k]
            s2 = mpf(s2_frac.numerator) / s2_frac.denominator
            c2 = mpf(c2_frac.numerator) / c2_frac.denominator
        else:
            theta = mpmath.pi / (k + 1)
            s2 = 4 * mpmath.sin(theta) ** 2
            c2 = 4 * mpmath.cos(theta) ** 2
        return (
            (s2 / (k + 1)) ** (r + 1)
            * mpf(n) ** r
            / math.factorial(r)
            * c2 ** (n - r)
        )


def _exact_counts_12k(k: int, r: int, order: int) -> TruncatedSeries:
    from .orthopoly import gf_avoiders_12k, gf_exactly_r_12k

    if r == 0:
        return gf_avoiders_12k(k, order)
    return gf_exactly_r_12k(k, r, order)


def comparison_table(
    k: int,
    r: int,
    n_max: int,
    precision: int = DEFAULT_PRECISION,
) -> list[tuple[int, int, mpf, mpf]]:
    """Rows (n, exact, estimate, exact/estimate) for n = 1..n_max, with the
    exact counts taken from the validated closed-form series."""
    if n_max < 1:
        return []
    series = _exact_counts_12k(k, r, n_max)
    rows = []
    with mpmath.workprec(precision):
        for n in range(1, n_max + 1):
            exact = series.coefficient(n)
            assert exact == int(exact)
            est = asymptotic_count(k, r, n, precision)
            rows.append((n, int(exact), est, mpf(int(exact)) / est))
    return rows


def theta_probe(
    k: int,
    r: int,
    n_max: int,
    precision: int = DEFAULT_PRECISION,
    max_n_oracle: int | None = None,
) -> list[tuple[int, mpf]]:
    """Normalized growth table for 132-avoiders with exactly r occurrences
    of the pattern 2 3 ... k 1: rows (n, count / (4 cos^2(pi/(k+1)))**n).

    Exact counts come from the validated closed forms when they apply
    (r = 0, or 1 <= r <= k-1 with k >= 3) and from the exhaustive census
    otherwise.  Emits the ratios for inspection; asserts no limit.
    """
    if n_max < 1:
        return []
    counts: list[int]
    if r == 0:
        from .orthopoly import gf_avoiders_23k1

        series = gf_avoiders_23k1(k, n_max)
        counts = [int(series.coefficient(n)) for n in range(1, n_max + 1)]
    elif 1 <= r <= k - 1 and k >= 3:
        from .orthopoly import gf_exactly_r_23k1

        series = gf_exactly_r_23k1(k, r, n_max)
        counts = [int(series.coefficient(n)) for n in range(1, n_max + 1)]
    else:
        from .oracle import census
        from .permutations import Pattern

        counts = []
        for n in range(1, n_max + 1):
            c = census(
                n,
                (Pattern((1, 3, 2)),),
                Pattern.rotated_increasing(k),
                max_n=max_n_oracle,
            )
            counts.append(c.count_with(r))
    with mpmath.workprec(precision):
        if k in _EXACT_TRIG:
            c2_frac = _EXACT_TRIG[k][1]
            base = mpf(c2_frac.numerator) / c2_frac.denominator
        else:
            base = 4 * mpmath.cos(mpmath.pi / (k + 1)) ** 2
        return [
            (n, mpf(count) / base**n)
            for n, count in zip(range(1, n_max + 1), counts)
        ]


def table_to_csv(rows: list[tuple[int, int, mpf, mpf]]) -> str:
    """CSV text with the (n, exact, estimate, ratio) header."""
    lines = ["n,exact,estimate,ratio"]
    for n, exact, est, ratio in rows:
        lines.append(
            f"{n},{exact},{mpmath.nstr(est, 17)},{mpmath.nstr(ratio, 17)}"
        )
    return "\n".join(lines) + "\n"
