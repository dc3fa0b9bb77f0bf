"""Lattice paths over the step alphabet {U, D, L} with height bookkeeping.

A path is a string of steps together with a starting height; the running
height must stay nonnegative at every prefix.  Dyck paths are paths without
level steps; a *closed* Dyck path starts and ends at height 0.  The same
value type serves the level-step (Motzkin) and peak-weight machinery, with
level steps simply unused for Dyck paths.

Weights are exact rationals.  The binomial path weights use the convention
C(a, b) = 0 for a < b and for a < 0 (see :func:`patterngf.util.binomial`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Literal, Mapping

from .util import binomial

UP = "U"
DOWN = "D"
LEVEL = "L"

#: Largest path length the exhaustive generators accept.
DEFAULT_PATH_BOUND = 24


class OracleBoundError(ValueError):
    """Raised when an exhaustive enumeration request exceeds its bound."""


class MissingWeightError(ValueError):
    """Raised when a weight lookup hits a height with no defined weight."""

    def __init__(self, kind: str, height: int):
        super().__init__(f"no {kind} weight defined at height {height}")
        self.kind = kind
        self.height = height


@dataclass(frozen=True)
class LatticePath:
    """A lattice path: steps over {U, D, L} from ``start_height``.

    >>> LatticePath("UUDD").heights()
    (1, 2, 1, 0)
    >>> LatticePath("UD").is_closed_dyck
    True
    """

    steps: str
    start_height: int = 0

    def __post_init__(self) -> None:
        if self.start_height < 0:
            raise ValueError("start_height must be >= 0")
        h = self.start_height
        for i, s in enumerate(self.steps):
            if s == UP:
                h += 1
            elif s == DOWN:
                h -= 1
            elif s != LEVEL:
                raise ValueError(f"invalid step {s!r} at index {i}")
            if h < 0:
                raise ValueError(
                    f"path dips below height 0 after prefix of length {i + 1}"
                )

    @classmethod
    def parse(cls, text: str, start_height: int = 0) -> "LatticePath":
        return cls(text.strip(), start_height)

    @property
    def length(self) -> int:
        return len(self.steps)

    @property
    def end_height(self) -> int:
        return (
            self.start_height
            + self.steps.count(UP)
            - self.steps.count(DOWN)
        )

    @property
    def is_closed_dyck(self) -> bool:
        return (
            LEVEL not in self.steps
            and self.start_height == 0
            and self.end_height == 0
        )

    def heights(self) -> tuple[int, ...]:
        """Height after each step (the profile excluding the start)."""
        out = []
        h = self.start_height
        for s in self.steps:
            if s == UP:
                h += 1
            elif s == DOWN:
                h -= 1
            out.append(h)
        return tuple(out)

    def __str__(self) -> str:
        return self.steps

    def __len__(self) -> int:
        return len(self.steps)


@dataclass(frozen=True)
class WeightSpec:
    """Per-height step weights: level steps, down-steps, and (optionally)
    down-steps that close a peak.

    ``down_weights[h]`` weighs a down-step from height h to h-1;
    ``level_weights[h]`` weighs a level step travelling at height h;
    ``peak_weights[h]``, when present, replaces the down weight for
    down-steps immediately preceded by an up-step.
    """

    level_weights: Mapping[int, Fraction] = field(default_factory=dict)
    down_weights: Mapping[int, Fraction] = field(default_factory=dict)
    peak_weights: Mapping[int, Fraction] | None = None

    def level(self, h: int) -> Fraction:
        try:
            return self.level_weights[h]
        except KeyError:
            raise MissingWeightError("level", h) from None

    def down(self, h: int) -> Fraction:
        try:
            return self.down_weights[h]
        except KeyError:
            raise MissingWeightError("down", h) from None

    def peak(self, h: int) -> Fraction:
        if self.peak_weights is None:
            raise MissingWeightError("peak", h)
        try:
            return self.peak_weights[h]
        except KeyError:
            raise MissingWeightError("peak", h) from None


def peaks(p: LatticePath) -> list[tuple[int, int]]:
    """All (index, apex height) pairs where an up-step is immediately
    followed by a down-step; the index is the 0-based index of the up-step.

    >>> [h for _, h in peaks(LatticePath("UUDUUUDUDDUDDDUD"))]
    [2, 4, 4, 3, 1]
    """
    out = []
    h = p.start_height
    for i, s in enumerate(p.steps):
        if s == UP:
            h += 1
            if i + 1 < len(p.steps) and p.steps[i + 1] == DOWN:
                out.append((i, h))
        elif s == DOWN:
            h -= 1
    return out


def weight_w1(k: int, p: LatticePath) -> int:
    """Sum over down-steps of C(start height - 1, k - 1).

    This statistic transports the count of increasing patterns of length k
    through the left-to-right bijection (see :mod:`patterngf.bijections`).

    >>> weight_w1(3, LatticePath("UUDUUUDUDDUDDDUD"))
    8
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not p.is_closed_dyck:
        raise ValueError("weight_w1 requires a closed Dyck path")
    total = 0
    h = 0
    for s in p.steps:
        if s == UP:
            h += 1
        else:
            total += binomial(h - 1, k - 1)
            h -= 1
    return total


def weight_w2(k: int, p: LatticePath) -> int:
    """Sum over peaks of C(apex height - 1, k - 1).

    >>> weight_w2(3, LatticePath("UUDUUUDUDDUDDDUD"))
    7
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not p.is_closed_dyck:
        raise ValueError("weight_w2 requires a closed Dyck path")
    return sum(binomial(h - 1, k - 1) for _, h in peaks(p))


def weight_motzkin(p: LatticePath, w: WeightSpec) -> Fraction:
    """Product of step weights: up-steps weigh 1, a level step at height h
    weighs its level weight, a down-step from h to h-1 weighs its down
    weight.

    ``w`` must not carry peak weights (use :func:`weight_peaked` for those).
    """
    if w.peak_weights is not None:
        raise ValueError("weight_motzkin takes a spec without peak weights")
    total = Fraction(1)
    h = p.start_height
    for s in p.steps:
        if s == UP:
            h += 1
        elif s == LEVEL:
            total *= w.level(h)
        else:
            total *= w.down(h)
            h -= 1
    return total


def weight_peaked(p: LatticePath, w: WeightSpec) -> Fraction:
    """Product of step weights on a closed Dyck path where a down-step from
    h to h-1 weighs the peak weight at h when immediately preceded by an
    up-step and the plain down weight otherwise; up-steps weigh 1."""
    if w.peak_weights is None:
        raise ValueError("weight_peaked requires peak weights")
    if not p.is_closed_dyck:
        raise ValueError("weight_peaked requires a closed Dyck path")
    total = Fraction(1)
    h = 0
    prev = ""
    for s in p.steps:
        if s == UP:
            h += 1
        else:
            total *= w.peak(h) if prev == UP else w.down(h)
            h -= 1
        prev = s
    return total


PathKind = Literal["dyck", "motzkin"]


def enumerate_paths(
    length: int,
    kind: PathKind = "dyck",
    *,
    max_height: int | None = None,
    from_height: int = 0,
    to_height: int = 0,
    bound: int = DEFAULT_PATH_BOUND,
) -> Iterator[LatticePath]:
    """Yield every path of the given kind, length and endpoints exactly once,
    in lexicographic step order (D < L < U), optionally bounded in height.

    Depth-first with height pruning, so memory stays O(length).  Requests
    longer than ``bound`` are refused.

    >>> [str(p) for p in enumerate_paths(4, "dyck")]
    ['UDUD', 'UUDD']
    """
    if length < 0 or from_height < 0 or to_height < 0:
        raise ValueError("length and endpoint heights must be >= 0")
    if length > bound:
        raise OracleBoundError(
            f"path length {length} exceeds the enumeration bound {bound}"
        )
    if kind not in ("dyck", "motzkin"):
        raise ValueError(f"unknown path kind {kind!r}")
    allow_level = kind == "motzkin"

    def feasible(h: int, remaining: int) -> bool:
        gap = abs(h - to_height)
        if gap > remaining:
            return False
        if not allow_level and (remaining - gap) % 2 != 0:
            return False
        return True

    prefix: list[str] = []

    def walk(h: int, remaining: int) -> Iterator[LatticePath]:
        if remaining == 0:
            if h == to_height:
                yield LatticePath("".join(prefix), from_height)
            return
        # lexicographic order over the step alphabet: D < L < U
        if h > 0 and feasible(h - 1, remaining - 1):
            prefix.append(DOWN)
            yield from walk(h - 1, remaining - 1)
            prefix.pop()
        if allow_level and feasible(h, remaining - 1):
            prefix.append(LEVEL)
            yield from walk(h, remaining - 1)
            prefix.pop()
        if (max_height is None or h < max_height) and feasible(
            h + 1, remaining - 1
        ):
            prefix.append(UP)
            yield from walk(h + 1, remaining - 1)
            prefix.pop()

    if max_height is not None and (
        from_height > max_height or to_height > max_height
    ):
        return
    yield from walk(from_height, length)
