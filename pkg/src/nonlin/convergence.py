"""Convergence experiments for sequences of functions.

A run tabulates ``int f_n`` for ``n = 1..n_max`` next to ``int lim f_n`` and
decides convergence at ``n_max`` with a rational tolerance. It also lists the
convergence theorems that apply to the chosen family and direction, with
each hypothesis checked on the instance.

Two conventions for finite ground sets:

* continuity of the measure (from below, from above, at the empty set) is
  automatic and is recorded as such, never tested;
* pointwise convergence is uniform, so "uniformly convergent" adds nothing
  beyond convergence.

The signed increasing theorem is sometimes printed with the condition
``lower(chi_X) < -inf``; it is implemented as finiteness (``< inf``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .engine import IntegralSpec
from .laws import example5_instance, value
from .measure import MonotoneMeasure, is_subadditive
from .rational import format_rational, parse_rational
from .simple import Direction, MeasurableFn, Sign, Structure

DEFAULT_TOL = Fraction(1, 10**9)
DEFAULT_NMAX = 40

CONVERGED = "CONVERGED"
NOT_CONVERGED = "NOT-CONVERGED"  # a theorem applies, tolerance not reached by n_max
LIMIT_EXCHANGE_FAILS = "LIMIT-EXCHANGE-FAILS"

SEQUENCE_KINDS = ("scaled", "shifted", "explicit", "example5")


@dataclass(frozen=True)
class SequenceSpec:
    """A sequence ``f_1, f_2, ...`` with a known limit.

    ``scaled``: ``(1 - r**n) f``, increasing when ``f >= 0``.
    ``shifted``: ``f + r**n g``, decreasing when ``g >= 0``; ``f = 0`` gives a
    sequence decreasing to zero.
    ``explicit``: the listed functions, limit given or taken as the last term.
    ``example5``: the truncated counterexample on ``N + 1`` points.
    """

    kind: str
    f: MeasurableFn | None = None
    r: Fraction | None = None
    g: MeasurableFn | None = None
    terms: tuple[MeasurableFn, ...] = ()
    limit_fn: MeasurableFn | None = None
    big_n: int | None = None

    def __post_init__(self):
        if self.kind not in SEQUENCE_KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}; expected one of {SEQUENCE_KINDS}")
        if self.kind in ("scaled", "shifted"):
            if self.f is None or self.r is None:
                raise ValueError(f"{self.kind} sequence needs f and r")
            if not 0 < self.r < 1:
                raise ValueError(f"r must lie in (0, 1), got {format_rational(self.r)}")
        if self.kind == "shifted":
            if self.g is None:
                raise ValueError("shifted sequence needs g")
            if not self.g.is_nonnegative():
                raise ValueError("shifted sequence needs g >= 0 so that f_n decreases")
        if self.kind == "explicit" and not self.terms:
            raise ValueError("explicit sequence needs at least one term")
        if self.kind == "example5" and (self.big_n is None or self.big_n < 1):
            raise ValueError("example5 sequence needs N >= 1")

    @classmethod
    def scaled(cls, f: MeasurableFn, r) -> SequenceSpec:
        return cls("scaled", f=f, r=parse_rational(r))

    @classmethod
    def shifted(cls, f: MeasurableFn, g: MeasurableFn, r) -> SequenceSpec:
        return cls("shifted", f=f, g=g, r=parse_rational(r))

    @classmethod
    def explicit(cls, terms, limit: MeasurableFn | None = None) -> SequenceSpec:
        return cls("explicit", terms=tuple(terms), limit_fn=limit)

    @classmethod
    def example5(cls, big_n: int) -> SequenceSpec:
        return cls("example5", big_n=big_n)

    @property
    def length(self) -> int | None:
        if self.kind == "explicit":
            return len(self.terms)
        if self.kind == "example5":
            return self.big_n
        return None

    def term(self, n: int) -> MeasurableFn:
        if n < 1:
            raise ValueError("sequences are indexed from 1")
        if self.kind == "scaled":
            return (1 - self.r**n) * self.f
        if self.kind == "shifted":
            return self.f + self.r**n * self.g
        if self.kind == "explicit":
            return self.terms[n - 1]
        return example5_instance(self.big_n)[1][n - 1]

    def limit(self) -> MeasurableFn:
        if self.kind in ("scaled", "shifted"):
            return self.f
        if self.kind == "explicit":
            return self.limit_fn if self.limit_fn is not None else self.terms[-1]
        return example5_instance(self.big_n)[2]

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.f is not None:
            out["f"] = self.f.to_json()
        if self.r is not None:
            out["r"] = format_rational(self.r)
        if self.g is not None:
            out["g"] = self.g.to_json()
        if self.terms:
            out["terms"] = [t.to_json() for t in self.terms]
        if self.limit_fn is not None:
            out["limit"] = self.limit_fn.to_json()
        if self.big_n is not None:
            out["N"] = self.big_n
        return out


@dataclass(frozen=True)
class Hypothesis:
    name: str
    met: bool
    note: str = ""


@dataclass
class TheoremCheck:
    theorem: str
    hypotheses: list[Hypothesis]

    @property
    def met(self) -> bool:
        return all(h.met for h in self.hypotheses)


@dataclass
class ConvergenceReport:
    spec: IntegralSpec
    sequence: SequenceSpec
    rows: list[tuple[int, Fraction | None]]
    limit_value: Fraction | None
    tol: Fraction
    direction: str
    theorems: list[TheoremCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def gap(self) -> Fraction | None:
        return _gap(self.rows[-1][1], self.limit_value)

    @property
    def converged(self) -> bool:
        g = self.gap
        return g is not None and g <= self.tol

    @property
    def converged_at(self) -> int | None:
        """Smallest n from which every tabulated value is within tolerance."""
        at = None
        for n, v in reversed(self.rows):
            g = _gap(v, self.limit_value)
            if g is None or g > self.tol:
                break
            at = n
        return at

    @property
    def verdict(self) -> str:
        if self.converged:
            return CONVERGED
        return NOT_CONVERGED if self.hypotheses_met else LIMIT_EXCHANGE_FAILS

    @property
    def hypotheses_met(self) -> bool:
        return any(t.met for t in self.theorems)

    @property
    def status(self) -> str:
        if not self.hypotheses_met:
            return "hypotheses-not-met"
        # A missed tolerance at finite n_max cannot refute an asymptotic statement.
        return "holds" if self.converged else "inconclusive"

    def to_json(self) -> dict:
        return {
            "spec": str(self.spec),
            "sequence": self.sequence.to_json(),
            "rows": [[n, _fmt(v)] for n, v in self.rows],
            "limit": _fmt(self.limit_value),
            "tol": format_rational(self.tol),
            "gap": _fmt(self.gap),
            "verdict": self.verdict,
            "converged_at": self.converged_at,
            "direction": self.direction,
            "status": self.status,
            "theorems": [
                {
                    "theorem": t.theorem,
                    "met": t.met,
                    "hypotheses": [{"name": h.name, "met": h.met, "note": h.note} for h in t.hypotheses],
                }
                for t in self.theorems
            ],
            "notes": self.notes,
        }

    def to_csv(self) -> str:
        lines = ["n,value"]
        lines += [f"{n},{_fmt(v)}" for n, v in self.rows]
        lines.append(f"limit,{_fmt(self.limit_value)}")
        lines.append(f"verdict,{self.verdict}")
        lines.append(f"converged_at,{'' if self.converged_at is None else self.converged_at}")
        lines.append(f"hypotheses,{self.status}")
        return "\n".join(lines) + "\n"


def _fmt(v: Fraction | None) -> str:
    return "-inf" if v is None else format_rational(v)


def _gap(a: Fraction | None, b: Fraction | None) -> Fraction | None:
    if a is None and b is None:
        return Fraction(0)
    if a is None or b is None:
        return None
    return abs(a - b)


def monotone_direction(fns: list[MeasurableFn]) -> str:
    """``constant``, ``increasing``, ``decreasing`` or ``none`` (pointwise, non-strict)."""
    up = all(a.leq(b) for a, b in zip(fns, fns[1:]))
    down = all(b.leq(a) for a, b in zip(fns, fns[1:]))
    if up and down:
        return "constant"
    if up:
        return "increasing"
    if down:
        return "decreasing"
    return "none"


def _theorems(m, spec, fns, limit, direction, lim_value, first_value) -> list[TheoremCheck]:
    fam = spec.family.finite_twin
    lower = spec.direction is Direction.LOWER
    nonneg = fam.sign is Sign.NONNEGATIVE
    partition = fam.structure is Structure.PARTITION
    everything = fns + [limit]
    all_nonneg = Hypothesis("f_n, f >= 0", all(h.is_nonnegative() for h in everything))
    one = MeasurableFn.constant(m.n, 1)
    chi_x = value(m, one, IntegralSpec(fam, Direction.LOWER))
    finite_m = Hypothesis("lower(chi_X) finite", chi_x is not None, f"= {_fmt(chi_x)}")
    finite_lim = Hypothesis("int f finite", lim_value is not None, f"= {_fmt(lim_value)}")
    finite_first = Hypothesis("int f_1 finite", first_value is not None, f"= {_fmt(first_value)}")
    continuity = Hypothesis("continuity of mu", True, "automatic on a finite ground set")
    increasing = Hypothesis("f_n increasing", direction in ("increasing", "constant"), direction)
    decreasing = Hypothesis("f_n decreasing", direction in ("decreasing", "constant"), direction)
    out: list[TheoremCheck] = []

    if lower and partition:
        hyps = [finite_m, finite_lim, Hypothesis("f_n -> f uniformly", True, "pointwise = uniform on finite X")]
        if nonneg:
            hyps.append(all_nonneg)
        out.append(TheoremCheck("uniform convergence (partitions, lower)", hyps))
    if lower and not partition:
        inf_val = min(v for h in everything for v in h.values)
        out.append(
            TheoremCheck(
                "uniform convergence (coverings, lower)",
                [
                    all_nonneg,
                    Hypothesis("inf of f_n and f is > 0", inf_val > 0, f"inf = {_fmt(inf_val)}"),
                    continuity,
                    finite_lim,
                    finite_first,
                ],
            )
        )
    if lower and nonneg:
        out.append(TheoremCheck("monotone increasing convergence (non-negative, lower)", [increasing, all_nonneg]))
    if lower and not nonneg:
        out.append(
            TheoremCheck(
                "monotone increasing convergence (signed partitions, lower)",
                [increasing, continuity, Hypothesis("lower(f_1) > -inf", first_value is not None), finite_m],
            )
        )
    if not lower and not nonneg:
        out.append(
            TheoremCheck(
                "monotone decreasing convergence (signed partitions, upper; sign reversal)",
                [decreasing, continuity, Hypothesis("upper(f_1) < inf", first_value is not None), finite_m],
            )
        )
    if not lower and nonneg and partition:
        out.append(TheoremCheck("monotone decreasing convergence (P+, upper)", [decreasing, continuity, finite_first]))
    if lower and nonneg:
        sub = is_subadditive(m)
        out.append(
            TheoremCheck(
                "monotone decreasing convergence (sub-additive measure, lower)",
                [decreasing, Hypothesis("mu sub-additive", sub), all_nonneg, finite_first],
            )
        )
    if lower and nonneg and partition:
        out.append(
            TheoremCheck(
                "decreasing to zero (P+, lower)",
                [
                    decreasing,
                    Hypothesis("f_n -> 0", all(v == 0 for v in limit.values)),
                    all_nonneg,
                    continuity,
                    finite_m,
                    finite_first,
                ],
            )
        )
    return out


def run_convergence(
    m: MonotoneMeasure,
    seq: SequenceSpec,
    spec: IntegralSpec,
    n_max: int = DEFAULT_NMAX,
    tol=DEFAULT_TOL,
) -> ConvergenceReport:
    """Tabulate ``int f_n`` for ``n <= n_max`` (or the sequence length) against ``int lim f_n``."""
    tol = parse_rational(tol)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    length = seq.length
    last = n_max if length is None else min(n_max, length)
    fns = [seq.term(n) for n in range(1, last + 1)]
    limit = seq.limit()
    for h in fns + [limit]:
        if h.n != m.n:
            raise ValueError(f"sequence lives on {h.n} points but the measure on {m.n}")
    rows = [(n, value(m, h, spec)) for n, h in enumerate(fns, start=1)]
    lim_value = value(m, limit, spec)
    direction = monotone_direction(fns + [limit])
    report = ConvergenceReport(spec, seq, rows, lim_value, tol, direction)
    report.theorems = _theorems(m, spec, fns, limit, direction, lim_value, rows[0][1])
    report.notes.append("continuity hypotheses are automatic on a finite ground set and are not tested")
    if seq.kind == "example5":
        report.notes.append(
            f"truncated at N={seq.big_n}: f_n is defined for n <= N only, so a limit-exchange failure "
            "shows up through the order of limits rather than as n -> infinity"
        )
    return report
