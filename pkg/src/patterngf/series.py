"""Exact truncated power series and the continued-fraction evaluators.

All arithmetic in this module is exact: coefficients are Python ints,
:class:`fractions.Fraction` values, or :class:`YPolynomial` values
(polynomials in a marker variable y with integer or rational coefficients).
No floating point ever enters.

Three layers:

- :class:`TruncatedSeries`: a univariate series in x, truncated at a fixed
  order, with exact ring arithmetic (add, mul, reciprocal, divide).
- :class:`YPolynomial`: sparse polynomials in y, usable as series
  coefficients, giving bivariate series in (x, y).
- :class:`HalfPowerSeries`: Laurent bookkeeping in an auxiliary variable t
  with t*t = x, for formulas written in half-integer powers of x.  A value
  converts back to an x-series only if every odd power of t carries a zero
  coefficient; the conversion asserts that.

On top of these sit the continued-fraction evaluators for weighted Motzkin
paths and peak-weighted Dyck paths, and the two bivariate generating
functions counting pattern occurrences over 132- and 123-avoiding
permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Union

from .util import binomial

Scalar = Union[int, Fraction]
Coefficient = Union[int, Fraction, "YPolynomial"]


class YPolynomial:
    """A sparse polynomial in the marker variable y.

    Stored as ``{exponent: coefficient}`` with no explicit zeros.  Supports
    the ring operations needed for series coefficients plus evaluation and
    single-exponent extraction.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Scalar] = {}
        if terms:
            for e, c in terms.items():
                if e < 0:
                    raise ValueError("y exponents must be >= 0")
                if c:
                    clean[e] = c
        self.terms = clean

    @classmethod
    def monomial(cls, exp: int, coeff: Scalar = 1) -> "YPolynomial":
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: Scalar) -> "YPolynomial":
        return cls({0: value})

    def degree(self) -> int:
        """Degree in y; -1 for the zero polynomial."""
        return max(self.terms, default=-1)

    def coefficient(self, exp: int) -> Scalar:
        return self.terms.get(exp, 0)

    def evaluate(self, value: Scalar) -> Scalar:
        return sum(c * value**e for e, c in self.terms.items())

    def is_constant(self) -> bool:
        return not self.terms or self.terms.keys() == {0}

    def inverse(self) -> "YPolynomial":
        if not self.is_constant():
            raise ValueError("only constant y-polynomials are invertible")
        c = self.terms.get(0, 0)
        if not c:
            raise ZeroDivisionError("zero polynomial has no inverse")
        return YPolynomial({0: Fraction(1, 1) / c if c != 1 else 1})

    def _coerce(self, other) -> "YPolynomial | None":
        if isinstance(other, YPolynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return YPolynomial({0: other})
        return None

    def __add__(self, other) -> "YPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return YPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "YPolynomial":
        return YPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "YPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "YPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "YPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[int, Scalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return YPolynomial(out)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    __hash__ = None  # mutable dict inside

    def __repr__(self) -> str:
        return f"YPolynomial({self.terms!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
                parts.append(f"{head}y" if e == 1 else f"{head}y^{e}")
        return " + ".join(parts).replace("+ -", "- ")


def _invert_coefficient(c: Coefficient) -> Coefficient:
    if isinstance(c, YPolynomial):
        return c.inverse()
    if c == 1:
        return 1
    return Fraction(1, 1) / c


class TruncatedSeries:
    """An exact power series in x truncated at a fixed order.

    ``coeffs[e]`` is the coefficient of x**e for e = 0..order; arithmetic is
    closed under truncation at the common order.  Values are immutable.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[Coefficient], order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be >= 0")
        if len(coeffs) < order + 1:
            coeffs.extend([0] * (order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs[: order + 1])

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def constant(cls, value: Coefficient, order: int) -> "TruncatedSeries":
        return cls([value], order)

    @classmethod
    def x_power(cls, exp: int, order: int) -> "TruncatedSeries":
        if exp < 0:
            raise ValueError("exp must be >= 0")
        return cls([0] * exp + [1], order)

    @classmethod
    def coerce(cls, value, order: int) -> "TruncatedSeries":
        if isinstance(value, TruncatedSeries):
            if value.order == order:
                return value
            return cls(value.coeffs, order)
        return cls.constant(value, order)

    def coefficient(self, exp: int) -> Coefficient:
        if exp < 0:
            return 0
        if exp > self.order:
            raise IndexError(f"exponent {exp} beyond truncation order {self.order}")
        return self.coeffs[exp]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1], order)

    def _match(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}"
                )
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other) -> "TruncatedSeries":
        o = self._match(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, o.coeffs)], self.order
        )

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __sub__(self, other) -> "TruncatedSeries":
        return self + (-self._match(other))

    def __rsub__(self, other) -> "TruncatedSeries":
        return self._match(other) + (-self)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, (int, Fraction, YPolynomial)):
            return TruncatedSeries(
                [other * a for a in self.coeffs], self.order
            )
        o = self._match(other)
        n = self.order
        out: list[Coefficient] = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = o.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def shift(self, exp: int) -> "TruncatedSeries":
        """Multiply by x**exp, dropping what moves past the order."""
        if exp < 0:
            raise ValueError("exp must be >= 0")
        return TruncatedSeries(
            [0] * exp + list(self.coeffs[: self.order + 1 - exp]), self.order
        )

    def reciprocal(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if not c0:
            raise ValueError("reciprocal requires a nonzero constant term")
        inv0 = _invert_coefficient(c0)
        out: list[Coefficient] = [inv0]
        for m in range(1, self.order + 1):
            acc: Coefficient = 0
            for j in range(1, m + 1):
                a = self.coeffs[j]
                if a:
                    acc = acc + a * out[m - j]
            out.append(-(inv0 * acc) if acc else 0)
        return TruncatedSeries(out, self.order)

    def __truediv__(self, other) -> "TruncatedSeries":
        return self * self._match(other).reciprocal()

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    __hash__ = None

    def evaluate_y(self, value: Scalar) -> "TruncatedSeries":
        """Substitute a value for y in every coefficient."""
        return TruncatedSeries(
            [
                c.evaluate(value) if isinstance(c, YPolynomial) else c
                for c in self.coeffs
            ],
            self.order,
        )

    def y_coefficient(self, exp: int) -> "TruncatedSeries":
        """Extract the series of coefficients of y**exp."""

        def pick(c: Coefficient) -> Scalar:
            if isinstance(c, YPolynomial):
                return c.coefficient(exp)
            return c if exp == 0 else 0

        return TruncatedSeries([pick(c) for c in self.coeffs], self.order)

    def is_bivariate(self) -> bool:
        return any(isinstance(c, YPolynomial) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)!r})"

    def __str__(self) -> str:
        parts = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            text = f"({c})" if isinstance(c, YPolynomial) else str(c)
            if e == 0:
                parts.append(text)
            elif e == 1:
                parts.append(f"{text} x")
            else:
                parts.append(f"{text} x^{e}")
        return " + ".join(parts) if parts else "0"

    def coefficient_strings(self) -> list:
        """Coefficients in the JSON shape: exact-rational strings, with
        bivariate coefficients as {y_exponent: coefficient} objects."""
        out = []
        for c in self.coeffs:
            if isinstance(c, YPolynomial):
                out.append(
                    {str(e): str(c.terms[e]) for e in sorted(c.terms)}
                )
            else:
                out.append(str(c))
        return out


def expand_rational(
    numerator: Sequence[Scalar],
    denominator: Sequence[Scalar],
    order: int,
) -> TruncatedSeries:
    """Power series of numerator/denominator via the coefficient recurrence.

    >>> expand_rational([1, -1], [1, -2], 5).coeffs
    (1, 1, 2, 4, 8, 16)
    """
    den = list(denominator)
    if not den or not den[0]:
        raise ValueError("denominator must have a nonzero constant term")
    num = list(numerator)
    d0 = den[0]
    out: list[Scalar] = []
    for m in range(order + 1):
        acc = num[m] if m < len(num) else 0
        for j in range(1, min(m, len(den) - 1) + 1):
            if den[j]:
                acc = acc - den[j] * out[m - j]
        out.append(acc if d0 == 1 else Fraction(acc) / d0)
    return TruncatedSeries(out, order)


@dataclass(frozen=True)
class HalfPowerSeries:
    """A truncated Laurent object ``t**offset * series(t)`` with t*t = x.

    The series part is a plain :class:`TruncatedSeries` in t; the offset may
    be negative.  Converting to an x-series requires every surviving odd
    power of t to carry a zero coefficient — the conversion checks this, so
    exponent-algebra slips surface immediately.
    """

    offset: int
    series: TruncatedSeries

    @classmethod
    def from_t_poly(
        cls, coeffs: Sequence[Coefficient], t_order: int, offset: int = 0
    ) -> "HalfPowerSeries":
        return cls(offset, TruncatedSeries(coeffs, t_order))

    @classmethod
    def one(cls, t_order: int) -> "HalfPowerSeries":
        return cls(0, TruncatedSeries.one(t_order))

    @classmethod
    def t_power(cls, exp: int, t_order: int) -> "HalfPowerSeries":
        """t**exp; exp counts half-powers of x and may be negative."""
        return cls(exp, TruncatedSeries.one(t_order))

    def __mul__(self, other) -> "HalfPowerSeries":
        if isinstance(other, HalfPowerSeries):
            return HalfPowerSeries(
                self.offset + other.offset, self.series * other.series
            )
        return HalfPowerSeries(self.offset, self.series * other)

    __rmul__ = __mul__

    def reciprocal(self) -> "HalfPowerSeries":
        return HalfPowerSeries(-self.offset, self.series.reciprocal())

    def __truediv__(self, other) -> "HalfPowerSeries":
        if not isinstance(other, HalfPowerSeries):
            other = HalfPowerSeries(
                0, TruncatedSeries.constant(other, self.series.order)
            )
        return self * other.reciprocal()

    def __pow__(self, exp: int) -> "HalfPowerSeries":
        if exp < 0:
            return self.reciprocal() ** (-exp)
        out = HalfPowerSeries.one(self.series.order)
        for _ in range(exp):
            out = out * self
        return out

    def __add__(self, other) -> "HalfPowerSeries":
        if not isinstance(other, HalfPowerSeries):
            return NotImplemented
        off = min(self.offset, other.offset)
        a = self.series.shift(self.offset - off)
        b = other.series.shift(other.offset - off)
        return HalfPowerSeries(off, a + b)

    def __neg__(self) -> "HalfPowerSeries":
        return HalfPowerSeries(self.offset, -self.series)

    def __sub__(self, other) -> "HalfPowerSeries":
        return self + (-other)

    def to_x_series(self, order: int) -> TruncatedSeries:
        """Interpret in x, requiring all odd powers of t to vanish."""
        top = 2 * order
        if self.offset + self.series.order < top:
            raise ValueError(
                "half-power series holds too few t-coefficients for "
                f"x-order {order}"
            )
        out: list[Coefficient] = [0] * (order + 1)
        for i, c in enumerate(self.series.coeffs):
            if not c:
                continue
            e = self.offset + i
            if e > top:
                continue
            if e < 0 or e % 2:
                raise ValueError(
                    f"nonzero coefficient at t^{e}: value is not a power "
                    "series in x"
                )
            out[e // 2] = c
        return TruncatedSeries(out, order)


WeightFn = Callable[[int], Union[TruncatedSeries, int, Fraction, YPolynomial]]


def _coerced_weight(fn: WeightFn, h: int, order: int, name: str) -> TruncatedSeries:
    w = TruncatedSeries.coerce(fn(h), order)
    if w.coeffs[0]:
        raise ValueError(
            f"{name} weight at height {h} has a constant term; the "
            "continued fraction would not converge formally"
        )
    return w


def cf_motzkin(
    b: WeightFn,
    lam: WeightFn,
    order: int,
    depth: int | None = None,
) -> TruncatedSeries:
    """Continued fraction for weighted Motzkin paths that start and end on
    the axis: 1/(1 - b_0 - lam_1/(1 - b_1 - lam_2/(...))), truncated at
    ``depth`` levels and at series order ``order``.

    Weights are series with zero constant term (each step must mark
    something).  The default depth ``order + 1`` is always sufficient: a
    continued-fraction level only affects paths that climb that high, and
    such paths carry at least that many marked down-steps.

    >>> cf_motzkin(lambda h: 0, lambda h: TruncatedSeries.x_power(2, 8), 8).coeffs
    (1, 0, 1, 0, 2, 0, 5, 0, 14)
    """
    if depth is None:
        depth = order + 1
    if depth < 1:
        raise ValueError("depth must be >= 1")
    one = TruncatedSeries.one(order)
    tail: TruncatedSeries | None = None
    for h in range(depth - 1, -1, -1):
        term = one - _coerced_weight(b, h, order, "level")
        if tail is not None:
            term = term - _coerced_weight(lam, h + 1, order, "down") * tail
        tail = term.reciprocal()
    assert tail is not None
    return tail


def cf_peaked_dyck(
    nu: WeightFn,
    lam: WeightFn,
    order: int,
    depth: int | None = None,
) -> TruncatedSeries:
    """Continued fraction for peak-weighted Dyck paths that start and end on
    the axis: 1/(1 - (nu_1 - lam_1) - lam_1/(1 - (nu_2 - lam_2) - ...)).

    ``nu`` weighs peak-closing down-steps, ``lam`` the remaining down-steps.

    >>> cf_peaked_dyck(lambda h: TruncatedSeries.x_power(1, 5),
    ...                lambda h: TruncatedSeries.x_power(1, 5), 5).coeffs
    (1, 1, 2, 5, 14, 42)
    """
    if depth is None:
        depth = order + 1
    if depth < 1:
        raise ValueError("depth must be >= 1")
    one = TruncatedSeries.one(order)
    tail: TruncatedSeries | None = None
    for h in range(depth, 0, -1):
        term = (
            one
            - _coerced_weight(nu, h, order, "peak")
            + _coerced_weight(lam, h, order, "down")
        )
        if tail is not None:
            term = term - _coerced_weight(lam, h, order, "down") * tail
        tail = term.reciprocal()
    assert tail is not None
    return tail


def bivariate_gf_12k(k: int, order: int) -> TruncatedSeries:
    """Series over 132-avoiding permutations; x marks the size, y marks the
    number of occurrences of the increasing pattern 1 2 ... k.

    Realized as the Motzkin continued fraction with level weights zero and
    the down weight at height h equal to x * y**C(h-1, k-1).

    >>> bivariate_gf_12k(2, 3).coefficient(3) == YPolynomial({3: 1, 2: 1, 1: 2, 0: 1})
    True
    """
    if k < 2:
        raise ValueError("k must be >= 2")

    def lam(h: int) -> TruncatedSeries:
        return TruncatedSeries(
            [0, YPolynomial.monomial(binomial(h - 1, k - 1))], order
        )

    return cf_motzkin(lambda h: 0, lam, order)


def bivariate_gf_k1k(k: int, order: int) -> TruncatedSeries:
    """Series over 123-avoiding permutations; x marks the size, y marks the
    number of occurrences of the pattern (k-1) (k-2) ... 1 k.

    Realized as the peak-weighted Dyck continued fraction with peak weight
    x * y**C(h-1, k-1) at height h and plain down weight x.
    """
    if k < 2:
        raise ValueError("k must be >= 2")

    def nu(h: int) -> TruncatedSeries:
        return TruncatedSeries(
            [0, YPolynomial.monomial(binomial(h - 1, k - 1))], order
        )

    def lam(h: int) -> TruncatedSeries:
        return TruncatedSeries([0, YPolynomial.constant(1)], order)

    return cf_peaked_dyck(nu, lam, order)
