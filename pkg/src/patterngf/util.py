"""Small combinatorial helpers shared across the package."""

from __future__ import annotations

import math


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b) with the path-weight conventions.

    C(a, 0) = 1 for every a (empty choice), and C(a, b) = 0 whenever
    b < 0 or a < b (in particular for negative a with b >= 1).

    >>> binomial(3, 2)
    3
    >>> binomial(0, 2)
    0
    >>> binomial(-1, 0)
    1
    """
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    return math.comb(a, b)


def catalan(n: int) -> int:
    """The n-th Catalan number C(2n, n)/(n + 1).

    >>> [catalan(n) for n in range(6)]
    [1, 1, 2, 5, 14, 42]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def motzkin_number(n: int) -> int:
    """The n-th Motzkin number.

    >>> [motzkin_number(n) for n in range(7)]
    [1, 1, 2, 4, 9, 21, 51]
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    return sum(math.comb(n, 2 * j) * catalan(j) for j in range(n // 2 + 1))
