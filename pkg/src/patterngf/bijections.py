"""Bijections between pattern-avoiding permutations and closed Dyck paths.

Two maps are provided, together with their inverses:

- :func:`phi` sends a 132-avoiding permutation of {1..n} to a closed Dyck
  path of length 2n.  Reading the permutation left to right, the j-th
  element contributes as many up-steps as needed followed by one down-step
  ending at height h_j, where h_j is the number of later elements larger
  than the j-th.  132-avoidance is exactly what keeps the construction
  well-formed, so it is validated up front and violations are rejected with
  a witness occurrence.
- :func:`psi` sends a 123-avoiding permutation to a closed Dyck path by
  reading the right-to-left-maxima decomposition from the right and then
  reflecting the resulting path in a vertical line.

Composing ``phi_inverse . psi`` yields a bijection from 123-avoiders onto
132-avoiders of the same size.
"""

from __future__ import annotations

import bisect

from .paths import DOWN, UP, LatticePath
from .permutations import (
    Pattern,
    Permutation,
    find_occurrence,
    left_to_right_minima,
    right_to_left_maxima,
)

PATTERN_132 = Pattern((1, 3, 2))
PATTERN_123 = Pattern((1, 2, 3))

_REFLECT = str.maketrans({UP: DOWN, DOWN: UP})


class PatternViolationError(ValueError):
    """A permutation contains a pattern that the operation forbids.

    Carries the forbidden pattern and a witness occurrence (1-based
    positions).
    """

    def __init__(self, pattern: Pattern, positions: tuple[int, ...]):
        super().__init__(
            f"permutation contains {pattern} at positions {positions}"
        )
        self.pattern = pattern
        self.positions = positions


def _require_avoids(pi: Permutation, pattern: Pattern) -> None:
    occ = find_occurrence(pi, pattern)
    if occ is not None:
        raise PatternViolationError(pattern, occ)


def _require_closed_dyck(p: LatticePath) -> None:
    if not p.is_closed_dyck:
        raise ValueError(f"not a closed Dyck path: {p.steps!r}")


def _runs(steps: str) -> list[tuple[int, int]]:
    """Maximal (up-run, down-run) pairs of a closed Dyck path."""
    out = []
    i = 0
    n = len(steps)
    while i < n:
        a = 0
        while i < n and steps[i] == UP:
            a += 1
            i += 1
        b = 0
        while i < n and steps[i] == DOWN:
            b += 1
            i += 1
        out.append((a, b))
    return out


def phi(pi: Permutation) -> LatticePath:
    """Map a 132-avoiding permutation to its closed Dyck path.

    >>> str(phi(Permutation.parse("74352681")))
    'UUDUUUDUDDUDDDUD'
    >>> str(phi(Permutation.parse("21")))
    'UDUD'
    """
    _require_avoids(pi, PATTERN_132)
    values = pi.values
    n = pi.n
    parts = []
    current = 0
    for j in range(n):
        v = values[j]
        later_larger = sum(1 for i in range(j + 1, n) if values[i] > v)
        ups = later_larger + 1 - current
        assert ups >= 0, "violated height step; input slipped past the check"
        parts.append(UP * ups + DOWN)
        current = later_larger
    return LatticePath("".join(parts))


def phi_via_minima(pi: Permutation) -> LatticePath:
    """Alternative construction of :func:`phi` from the left-to-right-minima
    decomposition: each minimum becomes the up-run that drops the running
    minimum, each in-between word of length w becomes w + 1 down-steps.

    Agrees with :func:`phi` on every 132-avoiding input.
    """
    _require_avoids(pi, PATTERN_132)
    minima = left_to_right_minima(pi)
    parts = []
    prev_value = pi.n + 1
    for idx, (pos, value) in enumerate(minima):
        next_pos = minima[idx + 1][0] if idx + 1 < len(minima) else pi.n + 1
        word_len = next_pos - pos - 1
        parts.append(UP * (prev_value - value) + DOWN * (word_len + 1))
        prev_value = value
    return LatticePath("".join(parts))


def phi_inverse(p: LatticePath) -> Permutation:
    """The unique 132-avoiding preimage of a closed Dyck path under
    :func:`phi`.

    Works through the run decomposition: the up-runs recover the
    left-to-right minima, the down-run lengths recover the word sizes, and
    each word is forced to take the smallest still-unused values above its
    minimum, in increasing order.

    >>> str(phi_inverse(LatticePath("UUDD")))
    '12'
    """
    _require_closed_dyck(p)
    n = p.steps.count(UP)
    runs = _runs(p.steps)
    minima = []
    word_sizes = []
    prev = n + 1
    for ups, downs in runs:
        prev -= ups
        minima.append(prev)
        word_sizes.append(downs - 1)
    minima_set = set(minima)
    unused = sorted(v for v in range(1, n + 1) if v not in minima_set)
    out: list[int] = []
    for m, wlen in zip(minima, word_sizes):
        out.append(m)
        i = bisect.bisect_right(unused, m)
        word = unused[i : i + wlen]
        assert len(word) == wlen, "closed Dyck path must admit a preimage"
        del unused[i : i + wlen]
        out.extend(word)
    return Permutation(tuple(out))


def psi(pi: Permutation) -> LatticePath:
    """Map a 123-avoiding permutation to its closed Dyck path.

    The right-to-left-maxima decomposition is read from the right: each
    maximum becomes the up-run that raises the running maximum, each word of
    length w becomes w + 1 down-steps, and the finished path is reflected
    in a vertical line (reverse the steps and swap up with down).

    >>> str(psi(Permutation.parse("58327641")))
    'UUDUUUDUDDUDDDUD'
    >>> str(psi(Permutation.parse("12")))
    'UUDD'
    """
    _require_avoids(pi, PATTERN_123)
    maxima = right_to_left_maxima(pi)
    parts = []
    prev_value = 0
    for idx in range(len(maxima) - 1, -1, -1):
        pos, value = maxima[idx]
        left_pos = maxima[idx - 1][0] if idx > 0 else 0
        word_len = pos - left_pos - 1
        parts.append(UP * (value - prev_value) + DOWN * (word_len + 1))
        prev_value = value
    steps = "".join(parts)
    return LatticePath(steps[::-1].translate(_REFLECT))


def psi_inverse(p: LatticePath) -> Permutation:
    """The unique 123-avoiding preimage of a closed Dyck path under
    :func:`psi`.

    Undoes the reflection, reads runs to recover the right-to-left maxima
    and word sizes, and fills the words with the remaining values: words are
    decreasing, and every element of a word is smaller than every element of
    the next word to its left, so the ascending complement is sliced
    greedily.
    """
    _require_closed_dyck(p)
    pre = p.steps[::-1].translate(_REFLECT)
    runs = _runs(pre)
    maxima = []
    word_sizes = []
    total = 0
    for ups, downs in runs:
        total += ups
        maxima.append(total)
        word_sizes.append(downs - 1)
    n = total
    maxima_set = set(maxima)
    rest = [v for v in range(1, n + 1) if v not in maxima_set]
    words = []
    start = 0
    for wlen in word_sizes:
        words.append(rest[start : start + wlen])
        start += wlen
    assert start == len(rest)
    out: list[int] = []
    for i in range(len(maxima) - 1, -1, -1):
        out.extend(reversed(words[i]))
        out.append(maxima[i])
    return Permutation(tuple(out))


def convert_123_to_132(pi: Permutation) -> Permutation:
    """Send a 123-avoiding permutation to the 132-avoiding permutation with
    the same Dyck path.

    >>> str(convert_123_to_132(Permutation.parse("58327641")))
    '74352681'
    """
    return phi_inverse(psi(pi))
