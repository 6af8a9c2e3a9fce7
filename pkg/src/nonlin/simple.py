"""Simple functions as sequences of (coefficient, set) pairs.

Two representations of the same pointwise function can have different basic
sums when the measure is not additive, so a :class:`SimpleFunction` keeps its
pairs exactly as given and is never collapsed by pointwise value.

Countable families on a finite ground set are identified with the finite
ones: a countable partition has at most ``n`` nonempty blocks and empty
blocks contribute ``a * mu(empty) = 0``; an absolutely convergent countable
covering can merge all mass sitting on the same set, and there are finitely
many sets. Both moves preserve the pointwise function and the basic sum.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .measure import MonotoneMeasure, members
from .rational import RationalLike, format_rational, parse_rational


class Structure(enum.Enum):
    PARTITION = "P"
    COVERING = "C"


class Sign(enum.Enum):
    NONNEGATIVE = "+"
    SIGNED = "±"


class Direction(enum.Enum):
    LOWER = "lower"  # sup of basic sums over L(E, f)
    UPPER = "upper"  # inf of basic sums over U(E, f)


@dataclass(frozen=True)
class FamilyTag:
    structure: Structure
    sign: Sign
    countable: bool = False

    @property
    def finite_twin(self) -> FamilyTag:
        return FamilyTag(self.structure, self.sign, False)

    @property
    def name(self) -> str:
        return f"{self.structure.value}{self.sign.value}" + ("_mu" if self.countable else "")

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> FamilyTag:
        """Accepts ``P+``, ``P±``, ``P+-``, ``Ppm``, ``C+_mu``, ``C±_μ`` and similar."""
        t = text.strip().replace(" ", "")
        countable = False
        for suffix in ("_mu", "_μ", "mu", "μ"):
            if t.lower().endswith(suffix):
                t = t[: -len(suffix)]
                countable = True
                break
        if len(t) < 2 or t[0].upper() not in "PC":
            raise ValueError(f"unknown family {text!r}")
        structure = Structure(t[0].upper())
        rest = t[1:].lower()
        if rest == "+":
            sign = Sign.NONNEGATIVE
        elif rest in ("±", "+-", "pm", "+/-"):
            sign = Sign.SIGNED
        else:
            raise ValueError(f"unknown family {text!r}")
        return cls(structure, sign, countable)


P_PLUS = FamilyTag(Structure.PARTITION, Sign.NONNEGATIVE)
P_PM = FamilyTag(Structure.PARTITION, Sign.SIGNED)
C_PLUS = FamilyTag(Structure.COVERING, Sign.NONNEGATIVE)
C_PM = FamilyTag(Structure.COVERING, Sign.SIGNED)
P_PLUS_MU = FamilyTag(Structure.PARTITION, Sign.NONNEGATIVE, True)
P_PM_MU = FamilyTag(Structure.PARTITION, Sign.SIGNED, True)
C_PLUS_MU = FamilyTag(Structure.COVERING, Sign.NONNEGATIVE, True)
C_PM_MU = FamilyTag(Structure.COVERING, Sign.SIGNED, True)

ALL_FAMILIES = (P_PLUS, P_PM, P_PLUS_MU, P_PM_MU, C_PLUS, C_PM, C_PLUS_MU, C_PM_MU)


@dataclass(frozen=True)
class MeasurableFn:
    """A rational-valued function on the points ``0..n-1``."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values:
            raise ValueError("a measurable function needs at least one point")

    @classmethod
    def of(cls, values: Iterable[RationalLike]) -> MeasurableFn:
        return cls(tuple(parse_rational(v) for v in values))

    @classmethod
    def constant(cls, n: int, c: RationalLike = 1) -> MeasurableFn:
        return cls((parse_rational(c),) * n)

    @classmethod
    def indicator(cls, n: int, mask: int) -> MeasurableFn:
        return cls(tuple(Fraction(1 if mask >> x & 1 else 0) for x in range(n)))

    @property
    def n(self) -> int:
        return len(self.values)

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]

    def __iter__(self):
        return iter(self.values)

    def __add__(self, other: MeasurableFn) -> MeasurableFn:
        _same_shape(self, other)
        return MeasurableFn(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: MeasurableFn) -> MeasurableFn:
        _same_shape(self, other)
        return MeasurableFn(tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, c) -> MeasurableFn:
        c = parse_rational(c)
        return MeasurableFn(tuple(c * v for v in self.values))

    __rmul__ = __mul__

    def shift(self, delta) -> MeasurableFn:
        """``f + delta * chi_X``."""
        delta = parse_rational(delta)
        return MeasurableFn(tuple(v + delta for v in self.values))

    def clamp0(self) -> MeasurableFn:
        """``f v 0``."""
        return MeasurableFn(tuple(max(v, Fraction(0)) for v in self.values))

    def restrict(self, mask: int) -> MeasurableFn:
        """``f * chi_A`` for the subset ``mask``."""
        return MeasurableFn(tuple(v if mask >> x & 1 else Fraction(0) for x, v in enumerate(self.values)))

    def leq(self, other: MeasurableFn) -> bool:
        _same_shape(self, other)
        return all(a <= b for a, b in zip(self.values, other.values))

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    def to_json(self) -> list[str]:
        return [format_rational(v) for v in self.values]


def _same_shape(f: MeasurableFn, g: MeasurableFn) -> None:
    if f.n != g.n:
        raise ValueError(f"functions live on different ground sets ({f.n} vs {g.n} points)")


@dataclass(frozen=True)
class SimpleFunction:
    pairs: tuple[tuple[Fraction, int], ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[tuple[RationalLike, int | Iterable[int]]]) -> SimpleFunction:
        """Build from ``(coefficient, mask)`` or ``(coefficient, [points])`` pairs."""
        out = []
        for a, s in pairs:
            if not isinstance(s, int):
                s = sum(1 << p for p in set(s))
            if s < 0:
                raise ValueError(f"negative subset mask {s}")
            out.append((parse_rational(a), s))
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def at(self, x: int) -> Fraction:
        bit = 1 << x
        return sum((a for a, s in self.pairs if s & bit), Fraction(0))

    def pointwise(self, n: int) -> MeasurableFn:
        return MeasurableFn(tuple(self.at(x) for x in range(n)))

    def to_json(self) -> list:
        return [[format_rational(a), members(s)] for a, s in self.pairs]


def evaluate(phi: SimpleFunction, x: int) -> Fraction:
    return phi.at(x)


def basic_sum(m: MonotoneMeasure, phi: SimpleFunction) -> Fraction:
    """Sum of ``a_k * mu(A_k)`` over the pairs as written."""
    return sum((a * m.values[s] for a, s in phi.pairs), Fraction(0))


def is_partition(phi: SimpleFunction, n: int) -> bool:
    full = (1 << n) - 1
    seen = 0
    for _, s in phi.pairs:
        if s == 0:
            continue
        if s & seen or s & ~full:
            return False
        seen |= s
    return seen == full


def is_covering(phi: SimpleFunction, n: int) -> bool:
    full = (1 << n) - 1
    union = 0
    for _, s in phi.pairs:
        if s & ~full:
            return False
        union |= s
    return union == full


def classify(phi: SimpleFunction, n: int) -> frozenset[FamilyTag]:
    """Every family the pair sequence belongs to.

    A partition is also a covering. Countable tags mirror the finite ones.
    """
    structures = []
    if is_partition(phi, n):
        structures.append(Structure.PARTITION)
    if is_covering(phi, n):
        structures.append(Structure.COVERING)
    signs = [Sign.SIGNED]
    if all(a >= 0 for a, _ in phi.pairs):
        signs.append(Sign.NONNEGATIVE)
    return frozenset(
        FamilyTag(st, sg, countable) for st in structures for sg in signs for countable in (False, True)
    )


def below(phi: SimpleFunction, f: MeasurableFn) -> bool:
    return all(phi.at(x) <= f[x] for x in range(f.n))


def above(phi: SimpleFunction, f: MeasurableFn) -> bool:
    return all(phi.at(x) >= f[x] for x in range(f.n))


def normalize_covering(phi: SimpleFunction) -> SimpleFunction:
    """Merge repeated sets and drop inert pairs, keeping first-appearance order.

    ``a * chi_A + b * chi_A`` contributes ``(a + b) * mu(A)`` either way, so
    the pointwise function and every basic sum are unchanged.
    """
    merged: dict[int, Fraction] = {}
    for a, s in phi.pairs:
        if s == 0:
            continue
        merged[s] = merged.get(s, Fraction(0)) + a
    return SimpleFunction(tuple((a, s) for s, a in merged.items() if a != 0))


def simple_from_json(data: Sequence) -> SimpleFunction:
    return SimpleFunction.of((a, pts) for a, pts in data)
