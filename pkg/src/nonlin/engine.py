"""Lower and upper decomposition integrals over the partition and covering families.

Naming used in the literature for the non-negative families:

====================  ===========================
lower over ``P+``     Pan integral
lower over ``C+``     SD integral
upper over ``P+``     "concave" integral
upper over ``C+``     convex integral
====================  ===========================

The engine computes the formulas (sup over sub-decompositions, inf over
super-decompositions) and treats these names as labels only. In particular,
the concave integral of the cooperative-game literature is a supremum over
sub-decompositions, while here "concave" is attached to the *upper* partition
integral; the values returned are always those of the formulas.

On a finite ground set every sup/inf is attained (finitely many partitions,
LP optimum at a vertex), so each value comes with a witness simple function.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .caps import COVERING_LP_CAP, PARTITION_DP_CAP, PARTITION_ORACLE_CAP, OracleTooLarge, check_size
from .lp import GE, LE, LinearProgram, LpStatus, solve
from .measure import MonotoneMeasure
from .simple import (
    C_PLUS,
    P_PLUS,
    Direction,
    FamilyTag,
    MeasurableFn,
    Sign,
    SimpleFunction,
    Structure,
)


class Status(enum.Enum):
    VALUE = "value"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class IntegralSpec:
    family: FamilyTag
    direction: Direction

    @classmethod
    def parse(cls, family: str, direction: str) -> IntegralSpec:
        return cls(FamilyTag.parse(family), Direction(direction.strip().lower()))

    def __str__(self) -> str:
        return f"{self.family.name}/{self.direction.value}"


@dataclass(frozen=True)
class IntegralResult:
    status: Status
    value: Fraction | None = None
    witness: SimpleFunction | None = None
    message: str = ""

    @property
    def ok(self) -> bool:
        return self.status is Status.VALUE


PAN = IntegralSpec(P_PLUS, Direction.LOWER)
SD = IntegralSpec(C_PLUS, Direction.LOWER)
CONCAVE = IntegralSpec(P_PLUS, Direction.UPPER)
CONVEX = IntegralSpec(C_PLUS, Direction.UPPER)


def _check_shapes(m: MonotoneMeasure, f: MeasurableFn) -> None:
    if f.n != m.n:
        raise ValueError(f"function has {f.n} points but the measure lives on {m.n}")


def integrate(m: MonotoneMeasure, f: MeasurableFn, spec: IntegralSpec) -> IntegralResult:
    _check_shapes(m, f)
    family = spec.family.finite_twin
    if family.structure is Structure.COVERING:
        if family.sign is Sign.SIGNED:
            return IntegralResult(
                Status.UNSUPPORTED,
                message=f"unsupported family {spec.family.name}: signed coverings are too wide to define the integral",
            )
        return covering_integral(m, f, spec.direction)
    return partition_integral(m, f, family.sign, spec.direction)


def _scaled(m: MonotoneMeasure, f: MeasurableFn):
    """Integer images of mu and f with their scale factors, for a fast exact DP."""
    lm = lcm(*(v.denominator for v in m.values))
    lf = lcm(*(v.denominator for v in f.values))
    mu = [v.numerator * (lm // v.denominator) for v in m.values]
    fi = [v.numerator * (lf // v.denominator) for v in f.values]
    return mu, lm, fi, lf


def partition_integral(m: MonotoneMeasure, f: MeasurableFn, sign: Sign, direction: Direction) -> IntegralResult:
    """Optimal partition integral by subset DP in O(3^n).

    For a fixed partition the best coefficient on each block is the block
    minimum of f (lower) or the block maximum (upper, clamped at 0 when the
    family is non-negative); the objective is monotone in each coefficient
    because mu >= 0. What remains is a search over partitions:
    ``best[S] = opt over T subset S containing min(S) of w(T) + best[S - T]``.
    """
    _check_shapes(m, f)
    check_size(m.n, PARTITION_DP_CAP, "partition DP")
    return _partition_cached(m, f, sign, direction)


@lru_cache(maxsize=4096)
def _partition_cached(m: MonotoneMeasure, f: MeasurableFn, sign: Sign, direction: Direction) -> IntegralResult:
    nonneg = sign is Sign.NONNEGATIVE
    lower = direction is Direction.LOWER
    if lower and nonneg and not f.is_nonnegative():
        return IntegralResult(
            Status.INFEASIBLE, message="no non-negative partition simple function lies below a function with negative values"
        )
    n = m.n
    size = 1 << n
    mu, lm, fi, lf = _scaled(m, f)

    # Block extrema by peeling the lowest point off each mask.
    coef = [0] * size
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        v = fi[low]
        if rest:
            v = min(v, coef[rest]) if lower else max(v, coef[rest])
        coef[mask] = v
    if not lower and nonneg:
        coef = [max(0, c) for c in coef]
    weight = [coef[s] * mu[s] for s in range(size)]

    best = [0] * size
    choice = [0] * size
    for s in range(1, size):
        low = s & -s
        rest = s ^ low
        top = None
        pick = 0
        # Descending submasks with >= / <= so the smallest optimal block wins ties.
        sub = rest
        while True:
            t = sub | low
            val = weight[t] + best[s ^ t]
            if top is None or (val >= top if lower else val <= top):
                top = val
                pick = t
            if sub == 0:
                break
            sub = (sub - 1) & rest
        best[s] = top
        choice[s] = pick

    blocks = []
    s = size - 1
    while s:
        blocks.append(choice[s])
        s ^= choice[s]
    blocks.sort()
    witness = SimpleFunction(tuple((Fraction(coef[t], lf), t) for t in blocks))
    return IntegralResult(Status.VALUE, Fraction(best[size - 1], lm * lf), witness)


def covering_lp(m: MonotoneMeasure, f: MeasurableFn, direction: Direction) -> LinearProgram:
    """One column per nonempty subset (mask order), one row per point."""
    full = m.full
    cols = range(1, full + 1)
    rel = LE if direction is Direction.LOWER else GE
    rows = []
    for x in range(m.n):
        bit = 1 << x
        rows.append(tuple(Fraction(1 if s & bit else 0) for s in cols))
    return LinearProgram(
        "max" if direction is Direction.LOWER else "min",
        tuple(m.values[s] for s in cols),
        tuple(rows),
        (rel,) * m.n,
        tuple(f.values),
    )


def covering_integral(m: MonotoneMeasure, f: MeasurableFn, direction: Direction) -> IntegralResult:
    """Lower/upper integral over non-negative coverings as an exact LP."""
    _check_shapes(m, f)
    check_size(m.n, COVERING_LP_CAP, "covering LP")
    return _covering_cached(m, f, direction)


@lru_cache(maxsize=4096)
def _covering_cached(m: MonotoneMeasure, f: MeasurableFn, direction: Direction) -> IntegralResult:
    if direction is Direction.LOWER and not f.is_nonnegative():
        return IntegralResult(
            Status.INFEASIBLE, message="no non-negative covering simple function lies below a function with negative values"
        )
    out = solve(covering_lp(m, f, direction))
    if out.status is LpStatus.INFEASIBLE:
        return IntegralResult(Status.INFEASIBLE, message="covering LP infeasible")
    if out.status is LpStatus.UNBOUNDED:
        return IntegralResult(Status.UNBOUNDED, message="covering LP unbounded")
    pairs = [(a, s) for s, a in enumerate(out.solution, start=1) if a != 0]
    union = 0
    for _, s in pairs:
        union |= s
    if union != m.full:
        # zero-weight pad so the witness is a covering; it does not change the basic sum
        pairs.append((Fraction(0), m.full & ~union))
    return IntegralResult(Status.VALUE, out.value, SimpleFunction(tuple(pairs)))


def brute_force_partition_oracle(
    m: MonotoneMeasure, f: MeasurableFn, sign: Sign, direction: Direction
) -> Fraction | None:
    """Partition integral by explicit enumeration of every set partition.

    Independent of the DP: partitions come from sympy, block coefficients are
    recomputed here from scratch. None means the lower family is empty.
    """
    from sympy.utilities.iterables import multiset_partitions

    _check_shapes(m, f)
    if m.n > PARTITION_ORACLE_CAP:
        raise OracleTooLarge(f"partition oracle limited to n <= {PARTITION_ORACLE_CAP}, got n={m.n}")
    lower = direction is Direction.LOWER
    nonneg = sign is Sign.NONNEGATIVE
    best = None
    for partition in multiset_partitions(list(range(m.n))):
        total = Fraction(0)
        feasible = True
        for block in partition:
            vals = [f[x] for x in block]
            c = min(vals) if lower else max(vals)
            if nonneg:
                if lower and c < 0:
                    feasible = False
                    break
                c = max(c, Fraction(0))
            total += c * m.values[sum(1 << x for x in block)]
        if not feasible:
            continue
        if best is None or (total > best if lower else total < best):
            best = total
    return best
