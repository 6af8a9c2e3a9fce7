"""Dense two-phase simplex over the rationals.

Pivoting follows Bland's rule (lowest-index entering column, ties in the ratio
test broken by lowest basic variable index), which guarantees termination on
degenerate problems. There is no floating-point phase anywhere.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .caps import BASIS_ORACLE_COLUMN_CAP, OracleTooLarge
from .rational import parse_rational

LE = "<="
GE = ">="


class DimensionMismatch(ValueError):
    pass


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LinearProgram:
    """``max`` or ``min`` of ``objective . x`` subject to row constraints and ``x >= 0``."""

    sense: str
    objective: tuple[Fraction, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    relations: tuple[str, ...]
    rhs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.sense not in ("max", "min"):
            raise DimensionMismatch(f"sense must be 'max' or 'min', got {self.sense!r}")
        m = len(self.objective)
        if not (len(self.rows) == len(self.relations) == len(self.rhs)):
            raise DimensionMismatch(
                f"{len(self.rows)} rows, {len(self.relations)} relations, {len(self.rhs)} right-hand sides"
            )
        for i, row in enumerate(self.rows):
            if len(row) != m:
                raise DimensionMismatch(f"row {i} has {len(row)} coefficients, expected {m}")
        for rel in self.relations:
            if rel not in (LE, GE):
                raise DimensionMismatch(f"unknown relation {rel!r}")

    @classmethod
    def build(cls, sense, objective, constraints) -> LinearProgram:
        """``constraints`` is an iterable of ``(coefficients, relation, rhs)``."""
        rows, rels, rhs = [], [], []
        for coeffs, rel, b in constraints:
            rows.append(tuple(parse_rational(c) for c in coeffs))
            rels.append(rel)
            rhs.append(parse_rational(b))
        return cls(sense, tuple(parse_rational(c) for c in objective), tuple(rows), tuple(rels), tuple(rhs))

    @property
    def n_vars(self) -> int:
        return len(self.objective)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.objective, x)), Fraction(0))

    def is_feasible(self, x: Sequence[Fraction]) -> bool:
        if len(x) != self.n_vars or any(v < 0 for v in x):
            return False
        for row, rel, b in zip(self.rows, self.relations, self.rhs):
            lhs = sum((a * v for a, v in zip(row, x)), Fraction(0))
            if (rel == LE and lhs > b) or (rel == GE and lhs < b):
                return False
        return True


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    value: Fraction | None = None
    solution: tuple[Fraction, ...] | None = None


class _Tableau:
    """Rows ``A x = b`` with an explicit basis; ``cost`` holds reduced costs for a max problem."""

    def __init__(self, a: list[list[Fraction]], b: list[Fraction], basis: list[int]):
        self.a = a
        self.b = b
        self.basis = basis
        self.cost: list[Fraction] = []
        self.z = Fraction(0)

    def set_objective(self, c: Sequence[Fraction]) -> None:
        # reduced cost r_j = c_j - sum_i c_B(i) a_ij ; objective = sum_i c_B(i) b_i
        cost = list(c)
        z = Fraction(0)
        for i, j in enumerate(self.basis):
            cb = c[j]
            if cb:
                row = self.a[i]
                for k, v in enumerate(row):
                    if v:
                        cost[k] -= cb * v
                z += cb * self.b[i]
        self.cost = cost
        self.z = z

    def pivot(self, r: int, j: int) -> None:
        row = self.a[r]
        p = row[j]
        if p != 1:
            inv = 1 / p
            for k, v in enumerate(row):
                if v:
                    row[k] = v * inv
            self.b[r] *= inv
        nz = [(k, v) for k, v in enumerate(row) if v]
        br = self.b[r]
        for i, other in enumerate(self.a):
            if i == r:
                continue
            factor = other[j]
            if factor:
                for k, v in nz:
                    other[k] -= factor * v
                self.b[i] -= factor * br
        factor = self.cost[j]
        if factor:
            for k, v in nz:
                self.cost[k] -= factor * v
            self.z += factor * br
        self.basis[r] = j

    def run(self, allowed: int) -> bool:
        """Maximize with Bland's rule over columns ``< allowed``. False if unbounded."""
        while True:
            j = next((k for k in range(allowed) if self.cost[k] > 0), None)
            if j is None:
                return True
            best = None
            for i, row in enumerate(self.a):
                if row[j] > 0:
                    key = (self.b[i] / row[j], self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], j)


def solve(lp: LinearProgram) -> LpOutcome:
    """Exact optimum of ``lp``; the returned solution is a basic feasible solution."""
    m = lp.n_vars
    r = len(lp.rows)
    sign = 1 if lp.sense == "max" else -1

    # Normalize to b >= 0, then add one slack/surplus column per row and one
    # artificial per >= row.
    a: list[list[Fraction]] = []
    b: list[Fraction] = []
    rels: list[str] = []
    for row, rel, rhs in zip(lp.rows, lp.relations, lp.rhs):
        if rhs < 0:
            row = tuple(-v for v in row)
            rhs = -rhs
            rel = GE if rel == LE else LE
        a.append(list(row))
        b.append(rhs)
        rels.append(rel)
    n_art = sum(rel == GE for rel in rels)
    width = m + r + n_art
    basis = []
    art = m + r
    for i, rel in enumerate(rels):
        a[i].extend([Fraction(0)] * (r + n_art))
        if rel == LE:
            a[i][m + i] = Fraction(1)
            basis.append(m + i)
        else:
            a[i][m + i] = Fraction(-1)
            a[i][art] = Fraction(1)
            basis.append(art)
            art += 1

    t = _Tableau(a, b, basis)
    if n_art:
        phase1 = [Fraction(0)] * (m + r) + [Fraction(-1)] * n_art
        t.set_objective(phase1)
        t.run(width)
        if t.z < 0:
            return LpOutcome(LpStatus.INFEASIBLE)
        # Drive zero-valued artificials out of the basis; drop rows that are redundant.
        i = 0
        while i < len(t.a):
            if t.basis[i] >= m + r:
                j = next((k for k in range(m + r) if t.a[i][k] != 0), None)
                if j is None:
                    del t.a[i], t.b[i], t.basis[i]
                    continue
                t.pivot(i, j)
            i += 1
        for row in t.a:
            del row[m + r:]

    c = [sign * v for v in lp.objective] + [Fraction(0)] * r
    t.set_objective(c)
    if not t.run(m + r):
        return LpOutcome(LpStatus.UNBOUNDED)
    x = [Fraction(0)] * m
    for i, j in enumerate(t.basis):
        if j < m:
            x[j] = t.b[i]
    x = tuple(x)
    return LpOutcome(LpStatus.OPTIMAL, lp.value(x), x)


def _solve_square(cols: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """Gauss-Jordan on the square system whose columns are ``cols``; None if singular."""
    k = len(b)
    mat = [[cols[j][i] for j in range(k)] + [b[i]] for i in range(k)]
    for c in range(k):
        p = next((i for i in range(c, k) if mat[i][c] != 0), None)
        if p is None:
            return None
        mat[c], mat[p] = mat[p], mat[c]
        piv = mat[c][c]
        mat[c] = [v / piv for v in mat[c]]
        for i in range(k):
            if i != c and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [v - f * w for v, w in zip(mat[i], mat[c])]
    return [mat[i][k] for i in range(k)]


def enumerate_basic_solutions(lp: LinearProgram, column_cap: int = BASIS_ORACLE_COLUMN_CAP):
    """Every basic feasible solution, found by solving all square row-basis systems.

    Independent of :func:`solve`: no pivoting, no phases, just linear algebra
    over each choice of basic columns. Meant as an oracle on tiny programs.
    Returns ``[(objective value, x), ...]`` without duplicates.
    """
    m = lp.n_vars
    r = len(lp.rows)
    total = m + r
    if total > column_cap:
        raise OracleTooLarge(f"basis enumeration over {total} columns exceeds the oracle cap {column_cap}")
    columns = []
    for j in range(m):
        columns.append([row[j] for row in lp.rows])
    for i, rel in enumerate(lp.relations):
        col = [Fraction(0)] * r
        col[i] = Fraction(1) if rel == LE else Fraction(-1)
        columns.append(col)
    b = list(lp.rhs)

    out = []
    seen = set()
    if r == 0:
        x = tuple([Fraction(0)] * m)
        return [(lp.value(x), x)]
    for chosen in combinations(range(total), r):
        sol = _solve_square([columns[j] for j in chosen], b)
        if sol is None or any(v < 0 for v in sol):
            continue
        full = [Fraction(0)] * total
        for j, v in zip(chosen, sol):
            full[j] = v
        x = tuple(full[:m])
        if x in seen:
            continue
        seen.add(x)
        out.append((lp.value(x), x))
    return out
