"""Brute-force ground truth: exhaustive permutation and path censuses.

Everything a generating function claims is tested against these censuses.
They are deliberately exhaustive — no sampling.  Requests beyond the
configured bounds are refused (``PATTERNGF_MAX_N`` overrides the
permutation bound).

Permutation iteration is in lexicographic order, partitioned by first
element; the partial histograms merge by exact addition, so the result is
bit-identical whether branches run sequentially or on a process pool.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .paths import (
    DEFAULT_PATH_BOUND,
    LatticePath,
    OracleBoundError,
    WeightSpec,
    enumerate_paths,
    weight_motzkin,
    weight_peaked,
)
from .permutations import Pattern, _count_occurrences, _find_occurrence

#: Default largest n for exhaustive permutation censuses (n = 11 is roughly
#: 4e7 permutations: minutes, not seconds).
DEFAULT_MAX_N = 11


def _max_n() -> int:
    env = os.environ.get("PATTERNGF_MAX_N")
    return int(env) if env else DEFAULT_MAX_N


@dataclass(frozen=True)
class Census:
    """Histogram of a pattern statistic over the avoiders of S_n."""

    n: int
    avoided: tuple[Pattern, ...]
    statistic: Pattern
    histogram: dict[int, int]

    def total(self) -> int:
        return sum(self.histogram.values())

    def count_with(self, occurrences: int) -> int:
        return self.histogram.get(occurrences, 0)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["occurrences", "count"])
        for occ in sorted(self.histogram):
            writer.writerow([occ, self.histogram[occ]])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "avoid": [str(p) for p in self.avoided],
                "count": str(self.statistic),
                "histogram": {
                    str(occ): self.histogram[occ]
                    for occ in sorted(self.histogram)
                },
            }
        )


@lru_cache(maxsize=None)
def _avoiders(n: int, avoid: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        if all(_find_occurrence(perm, pat) is None for pat in avoid):
            out.append(perm)
    return tuple(out)


def avoiding_permutations(
    n: int, avoid: Iterable[Pattern], *, max_n: int | None = None
) -> tuple[tuple[int, ...], ...]:
    """All permutations of S_n (as value tuples, lexicographic) avoiding
    every pattern in ``avoid``.  Cached per (n, pattern set)."""
    bound = max_n if max_n is not None else _max_n()
    if n > bound:
        raise OracleBoundError(
            f"exhaustive census over S_{n} exceeds the bound {bound}"
        )
    if n < 0:
        raise ValueError("n must be >= 0")
    key = tuple(sorted(p.values for p in avoid))
    return _avoiders(n, key)


def _census_branch(args) -> dict[int, int]:
    first, rest, avoid, statistic = args
    histogram: dict[int, int] = {}
    for tail in itertools.permutations(rest):
        perm = (first, *tail)
        if all(_find_occurrence(perm, pat) is None for pat in avoid):
            occ = _count_occurrences(perm, statistic)
            histogram[occ] = histogram.get(occ, 0) + 1
    return histogram


def census(
    n: int,
    avoid: Iterable[Pattern],
    count: Pattern,
    *,
    max_n: int | None = None,
    processes: int = 1,
) -> Census:
    """Histogram occurrence counts of ``count`` over the ``avoid``-avoiding
    permutations of S_n.

    ``processes > 1`` splits the scan by first element across a process
    pool; the merged result is identical to the sequential one.
    """
    bound = max_n if max_n is not None else _max_n()
    if n > bound:
        raise OracleBoundError(
            f"exhaustive census over S_{n} exceeds the bound {bound}"
        )
    if n < 0:
        raise ValueError("n must be >= 0")
    avoid = tuple(avoid)
    histogram: dict[int, int] = {}
    if n == 0:
        histogram[0] = 1
    elif processes <= 1:
        for perm in avoiding_permutations(n, avoid, max_n=bound):
            occ = _count_occurrences(perm, count.values)
            histogram[occ] = histogram.get(occ, 0) + 1
    else:
        import multiprocessing

        avoid_values = tuple(p.values for p in avoid)
        jobs = []
        for first in range(1, n + 1):
            rest = tuple(v for v in range(1, n + 1) if v != first)
            jobs.append((first, rest, avoid_values, count.values))
        with multiprocessing.Pool(processes) as pool:
            for part in pool.map(_census_branch, jobs):
                for occ, c in part.items():
                    histogram[occ] = histogram.get(occ, 0) + c
    return Census(n, avoid, count, histogram)


def path_census(
    length: int,
    weights: WeightSpec,
    *,
    kind: str | None = None,
    max_height: int | None = None,
    from_height: int = 0,
    to_height: int = 0,
    bound: int = DEFAULT_PATH_BOUND,
) -> Fraction:
    """Exact sum of path weights over every path of the given length and
    endpoints, using the peak-aware weight when the spec carries peak
    weights and the plain Motzkin weight otherwise.

    ``kind`` defaults to what the weights suggest: peak weights force Dyck
    paths, and an empty level-weight map means there is nothing for a level
    step to do, so Dyck again; otherwise Motzkin.
    """
    if kind is None:
        if weights.peak_weights is not None or not weights.level_weights:
            kind = "dyck"
        else:
            kind = "motzkin"
    weigh = weight_peaked if weights.peak_weights is not None else weight_motzkin
    total = Fraction(0)
    for path in enumerate_paths(
        length,
        kind,  # type: ignore[arg-type]
        max_height=max_height,
        from_height=from_height,
        to_height=to_height,
        bound=bound,
    ):
        total += weigh(path, weights)
    return total


def bounded_weight_sum(
    length: int,
    weights: WeightSpec,
    K: int,
    from_height: int = 0,
    to_height: int = 0,
) -> Fraction:
    """Transfer-style dynamic program: the exact weighted count of Motzkin
    paths of ``length`` steps from ``from_height`` to ``to_height`` that
    never pass above height K.

    Independent of both :func:`path_census` (which enumerates) and the
    strip series (which divides reciprocal polynomials); used to
    cross-check them.
    """
    if not (0 <= from_height <= K and 0 <= to_height <= K):
        return Fraction(0)
    state = [Fraction(0)] * (K + 1)
    state[from_height] = Fraction(1)
    for _ in range(length):
        nxt = [Fraction(0)] * (K + 1)
        for h, amount in enumerate(state):
            if not amount:
                continue
            if h + 1 <= K:
                nxt[h + 1] += amount
            nxt[h] += amount * weights.level(h)
            if h - 1 >= 0:
                nxt[h - 1] += amount * weights.down(h)
        state = nxt
    return state[to_height]


def count_avoiders(
    n: int, avoid: Iterable[Pattern], *, max_n: int | None = None
) -> int:
    """Number of permutations of S_n avoiding every pattern in ``avoid``."""
    if n == 0:
        return 1
    return len(avoiding_permutations(n, tuple(avoid), max_n=max_n))
