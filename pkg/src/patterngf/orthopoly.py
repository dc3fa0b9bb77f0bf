"""Three-term-recurrence polynomials, bounded-strip path series, and the
closed-form avoider generating functions.

The polynomial systems here follow the recurrence

    x * p_n(x) = p_{n+1}(x) + b_n * p_n(x) + lam_n * p_{n-1}(x),   n >= 1,

with p_0 = 1 and p_1 = x - b_0.  Their reciprocals p*_n(x) = x**n p_n(1/x)
are the denominators of the generating functions for Motzkin paths confined
to a horizontal strip; the strip series itself is a ratio of such
reciprocals (:func:`strip_gf`).

With all level weights 0 and down weights 1 the recurrence produces
Chebyshev polynomials of the second kind, p_n(x) = U_n(x/2).  Every closed
form in this module is a ratio of Chebyshev values at 1/(2*sqrt(x)); we
normalize those to the integer polynomials

    dyck_denominator(n) = x**(n/2) * U_n(1/(2*sqrt(x))),

which satisfy d_0 = d_1 = 1 and d_{n+1} = d_n - x * d_{n-1}.  Each public
generating function is evaluated twice — once in this normalization, once
literally in half powers of x through :class:`HalfPowerSeries` — and the
two evaluations are asserted identical, so exponent-algebra mistakes cannot
pass silently.

Closed forms provided (all as exact truncated series):

- :func:`gf_avoiders_12k`: 132-avoiders that also avoid 1 2 ... k.
- :func:`gf_exactly_r_12k`: 132-avoiders with exactly r occurrences of
  1 2 ... k (any r >= 1).
- :func:`gf_avoiders_23k1` / :func:`gf_exactly_r_23k1`: the analogous
  series for the pattern 2 3 ... k 1 (the latter for 1 <= r <= k - 1).
- :func:`gf_avoiders_k1k` / :func:`gf_exactly_r_k1k`: the analogous series
  over 123-avoiders for the pattern (k-1) (k-2) ... 1 k.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

from .series import HalfPowerSeries, TruncatedSeries, expand_rational
from .util import binomial, catalan

Scalar = Union[int, Fraction]
Poly = list  # dense coefficient list, lowest degree first
WeightIndex = Union[Callable[[int], Scalar], Mapping[int, Scalar]]


def _as_weight_fn(w: WeightIndex, name: str) -> Callable[[int], Scalar]:
    if callable(w):
        return w

    def lookup(i: int) -> Scalar:
        try:
            return w[i]
        except KeyError:
            raise ValueError(f"{name} weight undefined at index {i}") from None

    return lookup


def poly_add(a: Sequence[Scalar], b: Sequence[Scalar]) -> Poly:
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ]


def poly_scale(a: Sequence[Scalar], c: Scalar) -> Poly:
    return [c * x for x in a]


def poly_mul(a: Sequence[Scalar], b: Sequence[Scalar]) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out if out else [0]


def poly_shift(a: Sequence[Scalar], exp: int) -> Poly:
    return [0] * exp + list(a)


def poly_pow(a: Sequence[Scalar], exp: int) -> Poly:
    out: Poly = [1]
    for _ in range(exp):
        out = poly_mul(out, a)
    return out


def poly_eval(a: Sequence[Scalar], x: Scalar) -> Scalar:
    acc: Scalar = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _trim(a: Sequence[Scalar]) -> Poly:
    out = list(a)
    while len(out) > 1 and not out[-1]:
        out.pop()
    return out


class PolySystem:
    """Cached polynomials of a three-term recurrence with weights b, lam.

    Weights are given per index (callable or mapping).  Caches grow
    monotonically and are not locked: confine a system to one thread of
    control, or share only after the needed degrees are cached.
    """

    def __init__(self, b: WeightIndex, lam: WeightIndex):
        self._b = _as_weight_fn(b, "level")
        self._lam = _as_weight_fn(lam, "down")
        self._polys: list[Poly] = [[1]]
        self._stars: list[Poly] = [[1]]

    def level_weight(self, i: int) -> Scalar:
        return self._b(i)

    def down_weight(self, i: int) -> Scalar:
        return self._lam(i)

    def poly(self, n: int) -> Poly:
        """The degree-n recurrence polynomial (monic)."""
        while len(self._polys) <= n:
            m = len(self._polys)
            if m == 1:
                nxt = [-self._b(0), 1]
            else:
                p, q = self._polys[m - 1], self._polys[m - 2]
                nxt = poly_add(
                    poly_shift(p, 1),
                    poly_add(
                        poly_scale(p, -self._b(m - 1)),
                        poly_scale(q, -self._lam(m - 1)),
                    ),
                )
            self._polys.append(nxt)
        return list(self._polys[n])

    def reciprocal_poly(self, n: int) -> Poly:
        """x**n * p_n(1/x): the coefficient reversal of :meth:`poly`.

        Computed by the direct recurrence
        p*_{n+1} = (1 - b_n x) p*_n - lam_n x^2 p*_{n-1}, and checked
        against literal reversal.
        """
        while len(self._stars) <= n:
            m = len(self._stars)
            if m == 1:
                nxt = _trim([1, -self._b(0)])
            else:
                p, q = self._stars[m - 1], self._stars[m - 2]
                nxt = _trim(
                    poly_add(
                        poly_add(p, poly_shift(poly_scale(p, -self._b(m - 1)), 1)),
                        poly_shift(poly_scale(q, -self._lam(m - 1)), 2),
                    )
                )
            self._stars.append(nxt)
            reversed_p = _trim(list(reversed(self.poly(m))))
            assert nxt == reversed_p, (
                "reciprocal recurrence disagrees with coefficient reversal"
            )
        return list(self._stars[n])

    def shifted(self, m: int) -> "PolySystem":
        """The system with every weight index advanced by m."""
        if m < 0:
            raise ValueError("shift must be >= 0")
        b, lam = self._b, self._lam
        return PolySystem(lambda i: b(i + m), lambda i: lam(i + m))


def strip_gf(
    sys: PolySystem, K: int, r: int, s: int, order: int
) -> TruncatedSeries:
    """Series counting weighted Motzkin paths from height r to height s that
    never pass above height K, with x marking each step.

    Ratio of reciprocal polynomials: for r <= s it is
    x**(s-r) * p*_r * (shifted by s+1)p*_{K-s} / p*_{K+1}; for r >= s the
    mirrored expression picks up the product of the down weights crossed on
    the way from r to s.
    """
    if not (0 <= r <= K and 0 <= s <= K):
        raise ValueError(f"endpoints must lie in 0..{K}: got r={r}, s={s}")
    den = sys.reciprocal_poly(K + 1)
    if r <= s:
        num = poly_shift(
            poly_mul(
                sys.reciprocal_poly(r),
                sys.shifted(s + 1).reciprocal_poly(K - s),
            ),
            s - r,
        )
    else:
        prefactor: Scalar = 1
        for i in range(s + 1, r + 1):
            prefactor = prefactor * sys.down_weight(i)
        num = poly_scale(
            poly_shift(
                poly_mul(
                    sys.reciprocal_poly(s),
                    sys.shifted(r + 1).reciprocal_poly(K - r),
                ),
                r - s,
            ),
            prefactor,
        )
    return expand_rational(num, den, order)


def dyck_system() -> PolySystem:
    """The system with level weights 0 and down weights 1 (plain Dyck
    counting; its polynomials are Chebyshev-U values at x/2)."""
    return PolySystem(lambda i: 0, lambda i: 1)


_DYCK_DENOMS: list[Poly] = [[1], [1]]


def dyck_denominator(n: int) -> Poly:
    """Integer polynomial d_n with d_0 = d_1 = 1, d_{n+1} = d_n - x d_{n-1}.

    d_n(x) equals x**(n/2) * U_n(1/(2*sqrt(x))); it is the denominator of
    the generating function for Dyck paths of height < n (graded by
    semilength).

    >>> dyck_denominator(3)
    [1, -2]
    >>> dyck_denominator(4)
    [1, -3, 1]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    while len(_DYCK_DENOMS) <= n:
        d1 = _DYCK_DENOMS[-1]
        d2 = _DYCK_DENOMS[-2]
        _DYCK_DENOMS.append(_trim(poly_add(d1, poly_shift(poly_scale(d2, -1), 1))))
    return list(_DYCK_DENOMS[n])


def chebyshev_u(n: int) -> Poly:
    """Coefficients of the n-th Chebyshev polynomial of the second kind.

    >>> chebyshev_u(3)
    [0, -4, 0, 8]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    polys: list[Poly] = [[1], [0, 2]]
    while len(polys) <= n:
        polys.append(
            _trim(
                poly_add(
                    poly_shift(poly_scale(polys[-1], 2), 1),
                    poly_scale(polys[-2], -1),
                )
            )
        )
    return polys[n]


def chebyshev_u_half(n: int, t_order: int) -> HalfPowerSeries:
    """U_n(1/(2*sqrt(x))) as a Laurent object in t = sqrt(x).

    Equal to t**(-n) * d_n(t**2) with d_n the dyck denominator.
    """
    d = dyck_denominator(n)
    coeffs: list[Scalar] = []
    for c in d:
        coeffs.extend([c, 0])
    return HalfPowerSeries.from_t_poly(coeffs[:-1], t_order, offset=-n)


def _sqrt_x(t_order: int) -> HalfPowerSeries:
    return HalfPowerSeries.t_power(1, t_order)


def _t_order(order: int, k: int, r: int = 1) -> int:
    # enough t-headroom for every offset that the formulas below introduce
    return 2 * order + 2 * k * (r + 3) + 8


def gf_avoiders_12k(k: int, order: int) -> TruncatedSeries:
    """Series counting 132-avoiding permutations that also avoid the
    increasing pattern 1 2 ... k, by size.

    >>> gf_avoiders_12k(3, 5).coeffs
    (1, 1, 2, 4, 8, 16)
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    result = expand_rational(dyck_denominator(k - 1), dyck_denominator(k), order)
    T = _t_order(order, k)
    hp = chebyshev_u_half(k - 1, T) / (_sqrt_x(T) * chebyshev_u_half(k, T))
    assert hp.to_x_series(order) == result, "half-power evaluation disagrees"
    return result


def constraint_solutions(k: int, r: int) -> list[tuple[int, ...]]:
    """All nonnegative tuples (l_1, l_2, ...) with
    sum_i l_i * C(k - 2 + i, k - 1) = r, over the finitely many indices
    whose coefficient is <= r.

    >>> constraint_solutions(3, 3)
    [(0, 1), (3, 0)]
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    weights = []
    i = 1
    while True:
        w = binomial(k - 2 + i, k - 1)
        if w > r:
            break
        weights.append(w)
        i += 1
    out: list[tuple[int, ...]] = []

    def rec(idx: int, remaining: int, acc: list[int]) -> None:
        if idx == len(weights):
            if remaining == 0:
                out.append(tuple(acc))
            return
        w = weights[idx]
        for l in range(remaining // w + 1):
            acc.append(l)
            rec(idx + 1, remaining - l * w, acc)
            acc.pop()

    rec(0, r, [])
    return sorted(out)


def _ordering_product(ls: tuple[int, ...]) -> int:
    """Number of admissible interleavings of the marked down-steps: the
    chained product C(l_i + l_{i+1} - 1, l_{i+1}) up to the last nonzero
    index."""
    t = max((i for i, l in enumerate(ls) if l), default=-1)
    prod = 1
    for i in range(t):
        prod *= binomial(ls[i] + ls[i + 1] - 1, ls[i + 1])
    return prod


def gf_exactly_r_12k(k: int, r: int, order: int) -> TruncatedSeries:
    """Series counting 132-avoiding permutations with exactly r occurrences
    of the increasing pattern 1 2 ... k, by size (r >= 1).

    Sum over the solutions of :func:`constraint_solutions`; each solution
    contributes its interleaving count times
    d_{k-1}**(l1 - 1) * x**(l1 + k - 1 + l2 + l3 + ...) / d_k**(l1 + 1).

    >>> gf_exactly_r_12k(2, 1, 5).coeffs
    (0, 0, 1, 2, 3, 4)
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if r < 1:
        raise ValueError("r must be >= 1")
    T = _t_order(order, k, r)
    total = TruncatedSeries.zero(order)
    hp_total = HalfPowerSeries.from_t_poly([0], T)
    dk1 = dyck_denominator(k - 1)
    dk = dyck_denominator(k)
    u_k1 = chebyshev_u_half(k - 1, T)
    u_k = chebyshev_u_half(k, T)
    for ls in constraint_solutions(k, r):
        count = _ordering_product(ls)
        if not count:
            continue
        l1 = ls[0]
        rest = sum(ls[1:])
        assert l1 >= 1, "nonzero interleaving forces a nonzero first index"
        num = poly_shift(poly_pow(dk1, l1 - 1), l1 + k - 1 + rest)
        den = poly_pow(dk, l1 + 1)
        total = total + count * expand_rational(num, den, order)
        hp_total = hp_total + count * (
            (u_k1 ** (l1 - 1))
            / (u_k ** (l1 + 1))
            * HalfPowerSeries.t_power(l1 - 1 + 2 * rest, T)
        )
    assert hp_total.to_x_series(order) == total, "half-power evaluation disagrees"
    return total


def gf_avoiders_23k1(k: int, order: int) -> TruncatedSeries:
    """Series counting 132-avoiding permutations that also avoid the pattern
    2 3 ... k 1, by size.

    Assembled from the strip decomposition of the corresponding Dyck paths:
    either the path stays below height k - 1, or it splits into a climb to
    height k - 2, a geometric run of bounded middle portions, and a final
    descent.  The assembled series is asserted equal to the
    d_{k-1}/d_k ratio, which is the same closed form as
    :func:`gf_avoiders_12k`.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    T = 2 * order + 2
    K = k - 2
    sys = dyck_system()
    stay_low = strip_gf(sys, K, 0, 0, T)
    climb = strip_gf(sys, K, 0, K, T)
    middle = strip_gf(sys, K, K, K, T)
    descend = strip_gf(sys, K, K, 0, T)
    t2 = TruncatedSeries.x_power(2, T)
    geometric = (TruncatedSeries.one(T) - middle * t2).reciprocal()
    total_t = stay_low + climb * descend * t2 * geometric
    result = HalfPowerSeries(0, total_t).to_x_series(order)
    closed = expand_rational(dyck_denominator(k - 1), dyck_denominator(k), order)
    assert result == closed, "strip assembly disagrees with the closed form"
    return result


def gf_exactly_r_23k1(k: int, r: int, order: int) -> TruncatedSeries:
    """Series counting 132-avoiding permutations with exactly r occurrences
    of the pattern 2 3 ... k 1, for 1 <= r <= k - 1 and k >= 3.

    Sum over the divisors l of r:
    Cat(l) * (d_{k-3}/d_{k-2})**(r/l) * x**(l + r/l + k - 2) / (d_{k-3} d_k).

    >>> gf_exactly_r_23k1(3, 1, 5).coeffs
    (0, 0, 0, 1, 2, 4)
    """
    if k < 3:
        raise ValueError("k must be >= 3 (the closed form needs index k - 3)")
    if not 1 <= r <= k - 1:
        raise ValueError("r must satisfy 1 <= r <= k - 1")
    T = _t_order(order, k, r)
    dk3 = dyck_denominator(k - 3)
    dk2 = dyck_denominator(k - 2)
    dk = dyck_denominator(k)
    u_k3 = chebyshev_u_half(k - 3, T)
    u_k2 = chebyshev_u_half(k - 2, T)
    u_k = chebyshev_u_half(k, T)
    total = TruncatedSeries.zero(order)
    hp_total = HalfPowerSeries.from_t_poly([0], T)
    for l in range(1, r + 1):
        if r % l:
            continue
        m = r // l
        num = poly_shift(poly_pow(dk3, m - 1), l + m + k - 2)
        den = poly_mul(poly_pow(dk2, m), dk)
        total = total + catalan(l) * expand_rational(num, den, order)
        hp_total = hp_total + catalan(l) * (
            HalfPowerSeries.t_power(2 * l + m - 1, T)
            * (u_k3 / u_k2) ** m
            / (u_k3 * u_k)
        )
    assert hp_total.to_x_series(order) == total, "half-power evaluation disagrees"
    if r == 1:
        single = expand_rational(
            poly_shift([1], k), poly_mul(dk2, dk), order
        )
        assert total == single, "r = 1 must reduce to x / (U_{k-2} U_k)"
    return total


def gf_avoiders_k1k(k: int, order: int) -> TruncatedSeries:
    """Series counting 123-avoiding permutations that also avoid the pattern
    (k-1) (k-2) ... 1 k, by size.

    The closed form is the same d_{k-1}/d_k ratio as for the other two
    avoidance problems; asserted equal to :func:`gf_avoiders_12k`.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    result = expand_rational(dyck_denominator(k - 1), dyck_denominator(k), order)
    assert result == gf_avoiders_12k(k, order)
    return result


def gf_exactly_r_k1k(k: int, r: int, order: int) -> TruncatedSeries:
    """Series counting 123-avoiding permutations with exactly r occurrences
    of the pattern (k-1) (k-2) ... 1 k, for 1 <= r <= k - 1.

    Closed form d_{k-1}**(r-1) * x**(r + k - 1) / d_k**(r+1).

    >>> gf_exactly_r_k1k(3, 1, 5).coeffs
    (0, 0, 0, 1, 4, 12)
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 1 <= r <= k - 1:
        raise ValueError("r must satisfy 1 <= r <= k - 1")
    num = poly_shift(poly_pow(dyck_denominator(k - 1), r - 1), r + k - 1)
    den = poly_pow(dyck_denominator(k), r + 1)
    result = expand_rational(num, den, order)
    T = _t_order(order, k, r)
    hp = (
        HalfPowerSeries.t_power(r - 1, T)
        * chebyshev_u_half(k - 1, T) ** (r - 1)
        / chebyshev_u_half(k, T) ** (r + 1)
    )
    assert hp.to_x_series(order) == result, "half-power evaluation disagrees"
    return result
