"""Monotone measures on finite ground sets.

Points are ``0..n-1`` and subsets are n-bit masks, so a measure is just the
vector of its ``2**n`` values indexed by mask. The sigma-algebra is the full
power set. Continuity from above and below holds automatically: every
monotone sequence of subsets of a finite set is eventually constant.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .caps import MEASURE_CAP, check_size
from .rational import RationalLike, format_rational, parse_rational


class MeasureError(ValueError):
    pass


class NonZeroEmpty(MeasureError):
    pass


class NegativeValue(MeasureError):
    def __init__(self, mask: int, value: Fraction):
        self.mask = mask
        self.value = value
        super().__init__(f"mu({format_set(mask)}) = {format_rational(value)} is negative")


class NonMonotone(MeasureError):
    def __init__(self, subset: int, superset: int, values: tuple[Fraction, Fraction]):
        self.subset = subset
        self.superset = superset
        super().__init__(
            f"monotonicity fails: {format_set(subset)} is a subset of {format_set(superset)} "
            f"but mu = {format_rational(values[0])} > {format_rational(values[1])}"
        )


def members(mask: int) -> list[int]:
    """Points of a subset mask, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(points) -> int:
    mask = 0
    for p in points:
        mask |= 1 << p
    return mask


def format_set(mask: int) -> str:
    return "{" + ",".join(str(p) for p in members(mask)) + "}"


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` in increasing order, including 0 and ``mask``."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class GroundSet:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"ground set needs n >= 1, got {self.n!r}")

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def size(self) -> int:
        """Number of subsets."""
        return 1 << self.n


@dataclass(frozen=True)
class MonotoneMeasure:
    """A validated monotone set function; ``values[mask]`` is mu of that subset.

    Build instances through :func:`make_measure`, which converts and checks
    the raw values. Instances are immutable and hashable.
    """

    ground: GroundSet
    values: tuple[Fraction, ...]

    def __post_init__(self):
        _validate(self.ground, self.values)

    @property
    def n(self) -> int:
        return self.ground.n

    @property
    def full(self) -> int:
        return self.ground.full

    def __call__(self, mask: int) -> Fraction:
        return self.values[mask]

    def singleton(self, x: int) -> Fraction:
        return self.values[1 << x]

    def to_json(self) -> dict:
        return {"n": self.n, "mu": [format_rational(v) for v in self.values]}


def _validate(ground: GroundSet, values: tuple[Fraction, ...]) -> None:
    check_size(ground.n, MEASURE_CAP, "measure")
    if len(values) != ground.size:
        raise MeasureError(f"expected {ground.size} values for n={ground.n}, got {len(values)}")
    if values[0] != 0:
        raise NonZeroEmpty(f"mu(empty set) must be 0, got {format_rational(values[0])}")
    for mask, v in enumerate(values):
        if v < 0:
            raise NegativeValue(mask, v)
    # Cover relations A -> A + {x} suffice by transitivity.
    for mask, v in enumerate(values):
        for x in range(ground.n):
            bit = 1 << x
            if not mask & bit and v > values[mask | bit]:
                raise NonMonotone(mask, mask | bit, (v, values[mask | bit]))


def make_measure(ground: GroundSet | int, values: Sequence[RationalLike]) -> MonotoneMeasure:
    if isinstance(ground, int):
        ground = GroundSet(ground)
    return MonotoneMeasure(ground, tuple(parse_rational(v) for v in values))


def subadditivity_violation(m: MonotoneMeasure) -> tuple[int, int] | None:
    """First disjoint nonempty pair (A, B) with mu(A | B) > mu(A) + mu(B), or None.

    Exhaustive over all disjoint pairs; A < B as masks so each unordered pair
    is visited once.
    """
    full = m.full
    for a in range(1, full + 1):
        for b in submasks(full & ~a):
            if b > a and m.values[a | b] > m.values[a] + m.values[b]:
                return a, b
    return None


def is_subadditive(m: MonotoneMeasure) -> bool:
    return subadditivity_violation(m) is None


def is_additive(m: MonotoneMeasure) -> bool:
    singles = [m.singleton(x) for x in range(m.n)]
    return all(
        m.values[mask] == sum((singles[x] for x in members(mask)), Fraction(0))
        for mask in range(m.ground.size)
    )


MEASURE_KINDS = ("general", "subadditive", "additive")


def _random_rational(rng: random.Random, hi: int = 12) -> Fraction:
    return Fraction(rng.randint(0, hi), rng.choice((1, 2, 3, 4, 6)))


def random_measure(ground: GroundSet | int, seed, kind: str = "general") -> MonotoneMeasure:
    """Deterministic random measure of the requested kind.

    ``general``: independent draws per subset, repaired upward so each value is
    the max over its subsets. ``subadditive``: min(cap, sum of point weights).
    ``additive``: sum of point weights. ``seed`` may be an int or a string, or
    an existing :class:`random.Random` to draw from.
    """
    if isinstance(ground, int):
        ground = GroundSet(ground)
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n = ground.n
    values: list[Fraction] = [Fraction(0)] * ground.size
    if kind == "general":
        for mask in range(1, ground.size):
            # A sprinkle of zeros keeps non-subadditive (null-singleton) shapes common.
            raw = Fraction(0) if rng.random() < 0.15 else _random_rational(rng)
            best = raw
            for x in members(mask):
                best = max(best, values[mask & ~(1 << x)])
            values[mask] = best
    elif kind in ("subadditive", "additive"):
        weights = [Fraction(rng.randint(1, 12), rng.choice((1, 2, 3, 4))) for _ in range(n)]
        total = sum(weights, Fraction(0))
        cap = None
        if kind == "subadditive":
            cap = Fraction(rng.randint(1, 4 * max(1, int(total))), 4)
        for mask in range(1, ground.size):
            s = sum((weights[x] for x in members(mask)), Fraction(0))
            values[mask] = s if cap is None else min(cap, s)
    else:
        raise ValueError(f"unknown measure kind {kind!r}; expected one of {MEASURE_KINDS}")
    return MonotoneMeasure(ground, tuple(values))
