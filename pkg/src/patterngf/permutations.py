"""Permutations in one-line notation and classical pattern statistics.

Conventions used throughout the package:

- A permutation of {1, ..., n} is stored as a tuple of values in one-line
  notation; positions are 1-based in every reported result (witnesses,
  minima/maxima) to match the usual combinatorial reading.
- The text format is either a contiguous digit word for n <= 9 (``"74352681"``)
  or whitespace-separated integers (``"7 4 3 5 2 6 8 1"``).  Both are accepted
  when parsing; printing uses the digit word for n <= 9 and the
  whitespace-separated form otherwise.
- Occurrence counting is an exhaustive subset scan with monotone pruning.  It
  is deliberately simple: it plays the role of ground truth for everything
  else in the package, so clarity beats speed here.  Counts are plain Python
  integers (arbitrary precision).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation.

    >>> Permutation.parse("74352681").n
    8
    >>> str(Permutation((2, 1)))
    '21'
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(
                f"not a permutation of 1..{len(values)}: {values!r}"
            )

    @property
    def n(self) -> int:
        return len(self.values)

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse either a digit word (n <= 9) or whitespace-separated values."""
        text = text.strip()
        if not text:
            return cls(())
        if any(ch.isspace() for ch in text):
            return cls(tuple(int(tok) for tok in text.split()))
        if not text.isdigit():
            raise ValueError(f"cannot parse permutation from {text!r}")
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        if self.n <= 9:
            return "".join(str(v) for v in self.values)
        return " ".join(str(v) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)


@dataclass(frozen=True)
class Pattern(Permutation):
    """A classical pattern: a permutation of {1, ..., k} with k >= 1.

    The three pattern families used by the generating functions have named
    constructors:

    >>> str(Pattern.increasing(4))
    '1234'
    >>> str(Pattern.rotated_increasing(4))
    '2341'
    >>> str(Pattern.decreasing_then_max(4))
    '3214'
    """

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n < 1:
            raise ValueError("a pattern must have size k >= 1")

    @property
    def k(self) -> int:
        return self.n

    @classmethod
    def increasing(cls, k: int) -> "Pattern":
        """The pattern 1 2 ... k."""
        return cls(tuple(range(1, k + 1)))

    @classmethod
    def rotated_increasing(cls, k: int) -> "Pattern":
        """The pattern 2 3 ... k 1."""
        if k < 2:
            raise ValueError("rotated increasing pattern needs k >= 2")
        return cls(tuple(range(2, k + 1)) + (1,))

    @classmethod
    def decreasing_then_max(cls, k: int) -> "Pattern":
        """The pattern (k-1) (k-2) ... 1 k."""
        if k < 2:
            raise ValueError("decreasing-then-max pattern needs k >= 2")
        return cls(tuple(range(k - 1, 0, -1)) + (k,))


def _find_occurrence(
    values: Sequence[int], pattern: Sequence[int]
) -> tuple[int, ...] | None:
    """First (lexicographically smallest) occurrence of ``pattern`` in
    ``values`` as 0-based positions, or None.  Early exit on success."""
    k = len(pattern)
    n = len(values)
    if k > n:
        return None
    chosen_pos: list[int] = []
    chosen_val: list[int] = []

    def extend(start: int) -> bool:
        j = len(chosen_pos)
        if j == k:
            return True
        for p in range(start, n - (k - j) + 1):
            v = values[p]
            ok = True
            for t in range(j):
                if (pattern[t] < pattern[j]) != (chosen_val[t] < v):
                    ok = False
                    break
            if not ok:
                continue
            chosen_pos.append(p)
            chosen_val.append(v)
            if extend(p + 1):
                return True
            chosen_pos.pop()
            chosen_val.pop()
        return False

    if extend(0):
        return tuple(chosen_pos)
    return None


def _count_occurrences(values: Sequence[int], pattern: Sequence[int]) -> int:
    """Number of occurrences of ``pattern`` in ``values`` by pruned scan."""
    k = len(pattern)
    n = len(values)
    if k > n:
        return 0
    chosen_val: list[int] = []

    def extend(start: int) -> int:
        j = len(chosen_val)
        if j == k:
            return 1
        total = 0
        for p in range(start, n - (k - j) + 1):
            v = values[p]
            ok = True
            for t in range(j):
                if (pattern[t] < pattern[j]) != (chosen_val[t] < v):
                    ok = False
                    break
            if not ok:
                continue
            chosen_val.append(v)
            total += extend(p + 1)
            chosen_val.pop()
        return total

    return extend(0)


def count_occurrences(pi: Permutation, sigma: Pattern) -> int:
    """Number of index tuples i_1 < ... < i_k in ``pi`` whose values are
    order-isomorphic to ``sigma``; 0 when sigma.k > pi.n.

    >>> count_occurrences(Permutation.parse("74352681"), Pattern.increasing(3))
    8
    >>> count_occurrences(Permutation.parse("321"), Pattern.increasing(2))
    0
    """
    return _count_occurrences(pi.values, sigma.values)


def find_occurrence(pi: Permutation, sigma: Pattern) -> tuple[int, ...] | None:
    """First occurrence of ``sigma`` in ``pi`` as 1-based positions, or None."""
    occ = _find_occurrence(pi.values, sigma.values)
    if occ is None:
        return None
    return tuple(p + 1 for p in occ)


def avoids(pi: Permutation, sigma: Pattern) -> bool:
    """True iff ``pi`` contains no occurrence of ``sigma`` (early exit).

    >>> avoids(Permutation.parse("74352681"), Pattern((1, 3, 2)))
    True
    >>> avoids(Permutation.parse("132"), Pattern((1, 3, 2)))
    False
    """
    return _find_occurrence(pi.values, sigma.values) is None


def left_to_right_minima(pi: Permutation) -> list[tuple[int, int]]:
    """All (position, value) pairs where the value is smaller than every
    element to its left, in increasing position order (1-based positions).

    >>> [v for _, v in left_to_right_minima(Permutation.parse("74352681"))]
    [7, 4, 3, 2, 1]
    """
    out: list[tuple[int, int]] = []
    best: int | None = None
    for i, v in enumerate(pi.values, start=1):
        if best is None or v < best:
            out.append((i, v))
            best = v
    return out


def right_to_left_maxima(pi: Permutation) -> list[tuple[int, int]]:
    """All (position, value) pairs where the value is larger than every
    element to its right, in increasing position order (1-based positions).

    >>> [v for _, v in right_to_left_maxima(Permutation.parse("58327641"))]
    [8, 7, 6, 4, 1]
    """
    out: list[tuple[int, int]] = []
    best: int | None = None
    for i in range(pi.n, 0, -1):
        v = pi.values[i - 1]
        if best is None or v > best:
            out.append((i, v))
            best = v
    out.reverse()
    return out
