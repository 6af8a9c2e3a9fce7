"""Exact checks of the inequalities and identities satisfied by the integrals.

Every check takes a concrete instance, computes all integrals involved with
the engine and compares them exactly (no tolerance). The result is a
:class:`LawReport` whose ``instance`` is plain JSON, so any verdict can be
replayed with :func:`replay`.

An empty lower family (``L(E, f)`` with no members) is the value ``-inf`` and
is represented as ``None`` throughout.

The covering superadditivity statement is sometimes printed with mixed
arrows (sup on the left, infs on the right). The checks below use the direction-consistent forms
``lower(f + g) >= lower(f) + lower(g)`` and ``upper(f + g) <= upper(f) + upper(g)``,
which is what the argument for it establishes.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .engine import IntegralSpec, Status, integrate
from .measure import (
    MonotoneMeasure,
    format_set,
    is_additive,
    is_subadditive,
    make_measure,
    mask_of,
    members,
    random_measure,
    subadditivity_violation,
)
from .rational import format_rational, parse_rational
from .simple import (
    C_PLUS,
    C_PLUS_MU,
    P_PLUS,
    P_PLUS_MU,
    P_PM,
    P_PM_MU,
    Direction,
    FamilyTag,
    MeasurableFn,
    Sign,
    SimpleFunction,
    basic_sum,
    below,
)

LOWER = Direction.LOWER
UPPER = Direction.UPPER

SUPPORTED_FAMILIES = (P_PLUS, P_PM, P_PLUS_MU, P_PM_MU, C_PLUS, C_PLUS_MU)
SUPPORTED_SPECS = tuple(IntegralSpec(fam, d) for fam in SUPPORTED_FAMILIES for d in (LOWER, UPPER))


class LawStatus(enum.Enum):
    HOLDS = "holds"
    VIOLATED = "violated"
    HYPOTHESES_NOT_MET = "hypotheses-not-met"


@dataclass(frozen=True)
class Check:
    """One exact comparison ``lhs op rhs``; ``None`` on either side is -inf."""

    name: str
    lhs: Fraction | None
    op: str
    rhs: Fraction | None

    @property
    def holds(self) -> bool:
        a, b = self.lhs, self.rhs
        if self.op == "==":
            return a == b
        if self.op == "<=":
            return a is None or (b is not None and a <= b)
        if self.op == ">=":
            return b is None or (a is not None and a >= b)
        raise ValueError(self.op)

    def to_json(self) -> dict:
        return {"name": self.name, "lhs": _fmt(self.lhs), "op": self.op, "rhs": _fmt(self.rhs), "holds": self.holds}


def _fmt(v: Fraction | None) -> str:
    return "-inf" if v is None else format_rational(v)


@dataclass
class LawReport:
    law: str
    instance: dict
    status: LawStatus
    checks: list[Check] = field(default_factory=list)
    note: str = ""

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if not c.holds]

    def to_json(self) -> dict:
        out = {
            "law": self.law,
            "status": self.status.value,
            "instance": self.instance,
            "checks": [c.to_json() for c in self.checks],
        }
        if self.note:
            out["note"] = self.note
        return out


def _verdict(law: str, instance: dict, checks: list[Check], hypotheses_ok: bool = True, note: str = "") -> LawReport:
    if not hypotheses_ok:
        status = LawStatus.HYPOTHESES_NOT_MET
    elif all(c.holds for c in checks):
        status = LawStatus.HOLDS
    else:
        status = LawStatus.VIOLATED
    return LawReport(law, instance, status, checks, note)


def value(m: MonotoneMeasure, f: MeasurableFn, spec: IntegralSpec) -> Fraction | None:
    """Integral value with an empty lower family mapped to ``None`` (-inf)."""
    r = integrate(m, f, spec)
    if r.status is Status.VALUE:
        return r.value
    if r.status is Status.INFEASIBLE and spec.direction is LOWER:
        return None
    raise ValueError(f"{spec}: {r.status.value} ({r.message})")


def _add(*vals: Fraction | None) -> Fraction | None:
    if any(v is None for v in vals):
        return None
    return sum(vals, Fraction(0))


def _scale(c: Fraction, v: Fraction | None) -> Fraction | None:
    return None if v is None else c * v


def _require(family: FamilyTag, allowed: tuple[FamilyTag, ...], law: str) -> None:
    if family not in allowed:
        raise ValueError(f"{law} is stated for {', '.join(a.name for a in allowed)}; got {family.name}")


def _inst(law: str, m: MonotoneMeasure, **extra) -> dict:
    out = {"law": law, "n": m.n, "mu": [format_rational(v) for v in m.values]}
    for key, val in extra.items():
        if isinstance(val, MeasurableFn):
            out[key] = val.to_json()
        elif isinstance(val, Fraction):
            out[key] = format_rational(val)
        elif isinstance(val, FamilyTag):
            out[key] = val.name
        else:
            out[key] = val
    return out


# -- unconditional laws -------------------------------------------------------


def check_monotonicity(m: MonotoneMeasure, f: MeasurableFn, g: MeasurableFn) -> LawReport:
    """``f <= g`` implies ``int f <= int g`` for every supported family and direction."""
    checks = [Check(str(spec), value(m, f, spec), "<=", value(m, g, spec)) for spec in SUPPORTED_SPECS]
    return _verdict("monotonicity", _inst("monotonicity", m, f=f, g=g), checks, f.leq(g))


def check_homogeneity(m: MonotoneMeasure, f: MeasurableFn, c: Fraction) -> LawReport:
    c = parse_rational(c)
    checks = [Check(str(spec), value(m, c * f, spec), "==", _scale(c, value(m, f, spec))) for spec in SUPPORTED_SPECS]
    return _verdict("homogeneity", _inst("homogeneity", m, f=f, c=c), checks, c > 0)


def check_delta_shift(m: MonotoneMeasure, f: MeasurableFn, delta, family: FamilyTag = P_PLUS) -> LawReport:
    """``lower(f + delta) <= lower(f) + delta * lower(chi_X)`` over non-negative partitions."""
    delta = parse_rational(delta)
    _require(family, (P_PLUS, P_PLUS_MU), "delta_shift")
    spec = IntegralSpec(family, LOWER)
    ok = f.is_nonnegative() and delta > 0
    one = MeasurableFn.constant(m.n, 1)
    checks = [
        Check(
            "lower(f+delta) <= lower(f) + delta*lower(chi_X)",
            value(m, f.shift(delta), spec),
            "<=",
            _add(value(m, f, spec), _scale(delta, value(m, one, spec))),
        )
    ]
    return _verdict("delta_shift", _inst("delta_shift", m, f=f, delta=delta, family=family), checks, ok)


def check_restriction(m: MonotoneMeasure, f: MeasurableFn, a: int, family: FamilyTag = P_PLUS) -> LawReport:
    """Splitting f along a set and its complement: lower is super-, upper is sub-additive."""
    _require(family, (P_PLUS, P_PLUS_MU), "restriction")
    lo, up = IntegralSpec(family, LOWER), IntegralSpec(family, UPPER)
    ac = m.full & ~a
    fa, fac = f.restrict(a), f.restrict(ac)
    checks = [
        Check("lower(f) >= lower(f chi_A) + lower(f chi_Ac)", value(m, f, lo), ">=", _add(value(m, fa, lo), value(m, fac, lo))),
        Check("upper(f) <= upper(f chi_A) + upper(f chi_Ac)", value(m, f, up), "<=", _add(value(m, fa, up), value(m, fac, up))),
    ]
    return _verdict("restriction", _inst("restriction", m, f=f, A=members(a), family=family), checks, f.is_nonnegative())


def check_superadditivity(m: MonotoneMeasure, f: MeasurableFn, g: MeasurableFn, family: FamilyTag = C_PLUS) -> LawReport:
    _require(family, (C_PLUS, C_PLUS_MU), "superadditivity")
    lo, up = IntegralSpec(family, LOWER), IntegralSpec(family, UPPER)
    h = f + g
    checks = [
        Check("lower(f+g) >= lower(f) + lower(g)", value(m, h, lo), ">=", _add(value(m, f, lo), value(m, g, lo))),
        Check("upper(f+g) <= upper(f) + upper(g)", value(m, h, up), "<=", _add(value(m, f, up), value(m, g, up))),
    ]
    ok = f.is_nonnegative() and g.is_nonnegative()
    return _verdict("superadditivity", _inst("superadditivity", m, f=f, g=g, family=family), checks, ok)


def check_uniform_band(m: MonotoneMeasure, f: MeasurableFn, delta, family: FamilyTag = P_PLUS) -> LawReport:
    """``lower(f) - delta*M <= lower(f-delta [v 0]) <= lower(f+delta) <= lower(f) + delta*M``.

    ``M = lower(chi_X)``; the clamp at 0 applies to the non-negative families.
    """
    delta = parse_rational(delta)
    _require(family, (P_PLUS, P_PLUS_MU, P_PM, P_PM_MU), "uniform_band")
    spec = IntegralSpec(family, LOWER)
    nonneg = family.sign is Sign.NONNEGATIVE
    big_m = value(m, MeasurableFn.constant(m.n, 1), spec)
    down = f.shift(-delta)
    if nonneg:
        down = down.clamp0()
    base, lowered, raised = value(m, f, spec), value(m, down, spec), value(m, f.shift(delta), spec)
    checks = [
        Check("lower(f) - delta*M <= lower(f-delta)", _add(base, -delta * big_m), "<=", lowered),
        Check("lower(f-delta) <= lower(f+delta)", lowered, "<=", raised),
        Check("lower(f+delta) <= lower(f) + delta*M", raised, "<=", _add(base, delta * big_m)),
    ]
    ok = delta > 0 and (f.is_nonnegative() or not nonneg)
    return _verdict("uniform_band", _inst("uniform_band", m, f=f, delta=delta, family=family), checks, ok)


def check_nesting(m: MonotoneMeasure, f: MeasurableFn) -> LawReport:
    """Partitions are coverings, so ``L(P+) <= L(C+)`` and ``U(P+) <= U(C+)`` as sets."""
    checks = [
        Check("lower_P+(f) <= lower_C+(f)", value(m, f, IntegralSpec(P_PLUS, LOWER)), "<=", value(m, f, IntegralSpec(C_PLUS, LOWER))),
        Check("upper_C+(f) <= upper_P+(f)", value(m, f, IntegralSpec(C_PLUS, UPPER)), "<=", value(m, f, IntegralSpec(P_PLUS, UPPER))),
    ]
    return _verdict("nesting", _inst("nesting", m, f=f), checks, f.is_nonnegative())


# -- laws with hypotheses on the measure -------------------------------------


def check_pan_linearity(
    m: MonotoneMeasure,
    f: MeasurableFn,
    g: MeasurableFn,
    a=1,
    b=1,
    family: FamilyTag = P_PLUS,
    enforce_hypotheses: bool = True,
) -> LawReport:
    """Linearity of the lower partition integral under a sub-additive measure.

    With ``enforce_hypotheses=False`` the identity is tested on any measure;
    this is how the falsifier looks for counterexamples.
    """
    a, b = parse_rational(a), parse_rational(b)
    _require(family, (P_PLUS, P_PLUS_MU), "pan_linearity")
    spec = IntegralSpec(family, LOWER)
    lhs = value(m, a * f + b * g, spec)
    rhs = _add(_scale(a, value(m, f, spec)), _scale(b, value(m, g, spec)))
    checks = [Check("lower(a f + b g) == a lower(f) + b lower(g)", lhs, "==", rhs)]
    ok = f.is_nonnegative() and g.is_nonnegative() and a >= 0 and b >= 0
    note = ""
    if enforce_hypotheses:
        pair = subadditivity_violation(m)
        if pair is not None:
            ok = False
            note = f"measure not sub-additive: mu({format_set(pair[0] | pair[1])}) > mu({format_set(pair[0])}) + mu({format_set(pair[1])})"
    inst = _inst("pan_linearity", m, f=f, g=g, a=a, b=b, family=family, enforce_hypotheses=enforce_hypotheses)
    return _verdict("pan_linearity", inst, checks, ok, note)


def check_pan_eq_concave(
    m: MonotoneMeasure, f: MeasurableFn, countable: bool = False, enforce_hypotheses: bool = True
) -> LawReport:
    """Lower integrals over partitions and over coverings agree for sub-additive measures."""
    p, c = (P_PLUS_MU, C_PLUS_MU) if countable else (P_PLUS, C_PLUS)
    checks = [
        Check(
            f"lower_{p.name}(f) == lower_{c.name}(f)",
            value(m, f, IntegralSpec(p, LOWER)),
            "==",
            value(m, f, IntegralSpec(c, LOWER)),
        )
    ]
    ok = f.is_nonnegative()
    note = ""
    if enforce_hypotheses and not is_subadditive(m):
        ok = False
        note = "measure not sub-additive"
    inst = _inst("pan_eq_concave", m, f=f, countable=countable, enforce_hypotheses=enforce_hypotheses)
    return _verdict("pan_eq_concave", inst, checks, ok, note)


def check_additive_collapse(m: MonotoneMeasure, f: MeasurableFn, enforce_hypotheses: bool = True) -> LawReport:
    """For additive mu and f >= 0, the four non-negative integrals equal ``sum f(x) mu({x})``."""
    classical = sum((f[x] * m.singleton(x) for x in range(m.n)), Fraction(0))
    checks = [
        Check(str(spec), value(m, f, spec), "==", classical)
        for spec in (IntegralSpec(P_PLUS, LOWER), IntegralSpec(C_PLUS, LOWER), IntegralSpec(P_PLUS, UPPER), IntegralSpec(C_PLUS, UPPER))
    ]
    ok = f.is_nonnegative() and (is_additive(m) or not enforce_hypotheses)
    inst = _inst("additive_collapse", m, f=f, enforce_hypotheses=enforce_hypotheses)
    return _verdict("additive_collapse", inst, checks, ok)


# -- the truncated counterexample ---------------------------------------------


def example5_measure(big_n: int) -> MonotoneMeasure:
    """Points ``0..N``; mu(A) = 1 when A contains 0 and some other point, else 0."""
    if big_n < 1:
        raise ValueError(f"truncation N must be >= 1, got {big_n}")
    size = 1 << (big_n + 1)
    return make_measure(big_n + 1, [1 if (s & 1 and s & (s - 1)) else 0 for s in range(size)])


def example5_term(big_n: int, n: int) -> MeasurableFn:
    """``f_n``: 1 at the point 0 and ``1/n`` at the other N points."""
    return MeasurableFn((Fraction(1),) + (Fraction(1, n),) * big_n)


def example5_instance(big_n: int):
    """``(measure on N+1 points, [f_1, ..., f_N], chi_{0})``."""
    m = example5_measure(big_n)
    return m, [example5_term(big_n, n) for n in range(1, big_n + 1)], MeasurableFn.indicator(big_n + 1, 1)


def example5_witness(n: int) -> SimpleFunction:
    """``sum_{k=1..n} (1/n) chi_{{0,k}}``: below f_n with basic sum 1."""
    return SimpleFunction(tuple((Fraction(1, n), 1 | (1 << k)) for k in range(1, n + 1)))


def check_example5(big_n: int, family: FamilyTag = C_PLUS) -> LawReport:
    """Reproduce the counterexample to the uniform convergence theorem for coverings.

    Holds means every claimed value is reproduced exactly. The report also
    carries the naive limit exchange ``lim int f_n == int lim f_n``, which is
    expected to fail; on a truncation it shows up for every ``n <= N``.
    """
    _require(family, (C_PLUS, C_PLUS_MU), "example5")
    m, terms, limit = example5_instance(big_n)
    spec = IntegralSpec(family, LOWER)
    checks = []
    for n, fn in enumerate(terms, start=1):
        checks.append(Check(f"lower(f_{n}) == 1", value(m, fn, spec), "==", Fraction(1)))
        phi = example5_witness(n)
        checks.append(Check(f"witness_{n} below f_{n} (1 = yes)", Fraction(int(below(phi, fn))), "==", Fraction(1)))
        checks.append(Check(f"basic_sum(witness_{n}) == 1", basic_sum(m, phi), "==", Fraction(1)))
    checks.append(Check("lower(chi_{0}) == 0", value(m, limit, spec), "==", Fraction(0)))
    checks.append(Check("lower(chi_X) <= 1", value(m, MeasurableFn.constant(m.n, 1), spec), "<=", Fraction(1)))
    report = _verdict("example5", {"law": "example5", "N": big_n, "family": family.name}, checks)
    exchange = Check("lim lower(f_n) == lower(lim f_n)", value(m, terms[-1], spec), "==", value(m, limit, spec))
    report.note = (
        f"naive limit exchange {'holds' if exchange.holds else 'fails'}: "
        f"lower(f_n) = {_fmt(exchange.lhs)} for n <= {big_n} but lower(chi_{{0}}) = {_fmt(exchange.rhs)}; "
        "on a truncated ground set the failure is visible only through the order of limits (n <= N)"
    )
    return report


# -- replay, random suites, falsifier -----------------------------------------


def _decode(instance: dict) -> dict:
    kwargs = {}
    if "mu" in instance:
        kwargs["m"] = make_measure(instance["n"], instance["mu"])
    for key, val in instance.items():
        if key in ("law", "n", "mu", "trial"):
            continue
        if key in ("f", "g"):
            kwargs[key] = MeasurableFn.of(val)
        elif key in ("delta", "a", "b", "c"):
            kwargs[key] = parse_rational(val)
        elif key == "A":
            kwargs["a"] = mask_of(val)
        elif key == "family":
            kwargs[key] = FamilyTag.parse(val)
        elif key == "N":
            kwargs["big_n"] = int(val)
        else:
            kwargs[key] = val
    return kwargs


LAW_CHECKS: dict[str, Callable[..., LawReport]] = {
    "monotonicity": check_monotonicity,
    "homogeneity": check_homogeneity,
    "delta_shift": check_delta_shift,
    "restriction": check_restriction,
    "superadditivity": check_superadditivity,
    "uniform_band": check_uniform_band,
    "pan_linearity": check_pan_linearity,
    "pan_eq_concave": check_pan_eq_concave,
    "nesting": check_nesting,
    "additive_collapse": check_additive_collapse,
    "example5": check_example5,
}
LAW_IDS = tuple(LAW_CHECKS)

# Measure kind a law needs for its hypotheses; others run on general measures.
REQUIRED_KIND = {"pan_linearity": "subadditive", "pan_eq_concave": "subadditive", "additive_collapse": "additive"}


def replay(report: LawReport | dict) -> LawReport:
    data = report.to_json() if isinstance(report, LawReport) else report
    instance = data["instance"]
    return LAW_CHECKS[instance["law"]](**_decode(instance))


def _rat(rng: random.Random, lo: int = 0, hi: int = 12) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice((1, 2, 3, 4, 6)))


def random_fn(rng: random.Random, n: int, signed: bool = False) -> MeasurableFn:
    return MeasurableFn(tuple(_rat(rng, -12 if signed else 0) if rng.random() > 0.1 else Fraction(0) for _ in range(n)))


def _positive(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 12), rng.choice((1, 2, 3, 4, 6)))


def sample(law: str, rng: random.Random, n_max: int = 6, measure_kind: str | None = None, drop_hypotheses: bool = False) -> dict:
    """Random keyword arguments for ``LAW_CHECKS[law]``."""
    if law == "example5":
        raise ValueError("example5 is a fixed construction; use check_example5(N)")
    n = rng.randint(1, n_max)
    kind = measure_kind or REQUIRED_KIND.get(law, "general")
    m = random_measure(n, rng, kind)
    twin = rng.random() < 0.5
    if law == "monotonicity":
        f = random_fn(rng, n, signed=rng.random() < 0.5)
        return {"m": m, "f": f, "g": f + random_fn(rng, n)}
    if law == "homogeneity":
        return {"m": m, "f": random_fn(rng, n, signed=rng.random() < 0.5), "c": _positive(rng)}
    if law == "delta_shift":
        return {"m": m, "f": random_fn(rng, n), "delta": _positive(rng), "family": P_PLUS_MU if twin else P_PLUS}
    if law == "restriction":
        return {"m": m, "f": random_fn(rng, n), "a": rng.randint(0, m.full), "family": P_PLUS_MU if twin else P_PLUS}
    if law == "superadditivity":
        return {"m": m, "f": random_fn(rng, n), "g": random_fn(rng, n), "family": C_PLUS_MU if twin else C_PLUS}
    if law == "uniform_band":
        family = rng.choice((P_PLUS, P_PLUS_MU, P_PM, P_PM_MU))
        return {"m": m, "f": random_fn(rng, n, signed=family.sign is Sign.SIGNED), "delta": _positive(rng), "family": family}
    if law == "pan_linearity":
        return {
            "m": m,
            "f": random_fn(rng, n),
            "g": random_fn(rng, n),
            "a": _rat(rng),
            "b": _rat(rng),
            "family": P_PLUS_MU if twin else P_PLUS,
            "enforce_hypotheses": not drop_hypotheses,
        }
    if law == "pan_eq_concave":
        return {"m": m, "f": random_fn(rng, n), "countable": twin, "enforce_hypotheses": not drop_hypotheses}
    if law == "nesting":
        return {"m": m, "f": random_fn(rng, n)}
    if law == "additive_collapse":
        return {"m": m, "f": random_fn(rng, n), "enforce_hypotheses": not drop_hypotheses}
    raise ValueError(f"unknown law {law!r}; valid ids: {', '.join(LAW_IDS)}")


def trial_rng(law: str, seed: int, index: int) -> random.Random:
    return random.Random(f"{law}:{seed}:{index}")


def run_law_suite(
    law: str,
    trials: int = 1000,
    seed: int = 0,
    n_max: int = 6,
    measure_kind: str | None = None,
    drop_hypotheses: bool | None = None,
    big_n: int = 6,
) -> list[LawReport]:
    """Run ``trials`` random instances of one law; deterministic per seed.

    ``drop_hypotheses=None`` drops a law's measure hypothesis exactly when the
    requested ``measure_kind`` does not guarantee it (e.g. ``pan_linearity``
    on general measures), which turns the suite into a counterexample search.
    """
    if law not in LAW_CHECKS:
        raise ValueError(f"unknown law {law!r}; valid ids: {', '.join(LAW_IDS)}")
    if law == "example5":
        return [check_example5(big_n)]
    if drop_hypotheses is None:
        required = REQUIRED_KIND.get(law)
        drop_hypotheses = required is not None and measure_kind is not None and measure_kind != required
    reports = []
    for i in range(trials):
        kwargs = sample(law, trial_rng(law, seed, i), n_max, measure_kind, drop_hypotheses)
        report = LAW_CHECKS[law](**kwargs)
        report.instance["trial"] = i
        reports.append(report)
    return reports


def summarize(reports: list[LawReport]) -> dict[str, int]:
    counts = {s.value: 0 for s in LawStatus}
    for r in reports:
        counts[r.status.value] += 1
    return counts


def falsify(law: str, measure_kind: str = "general", trials: int = 1000, seed: int = 0, n_max: int = 6) -> LawReport | None:
    """Search for a violation with the law's measure hypotheses dropped.

    Returns the first violating report after re-verifying it by replay from
    its serialized instance, or None when the budget is exhausted.
    """
    for i in range(trials):
        kwargs = sample(law, trial_rng(law, seed, i), n_max, measure_kind, drop_hypotheses=True)
        report = LAW_CHECKS[law](**kwargs)
        if report.status is LawStatus.VIOLATED:
            report.instance["trial"] = i
            again = replay(report)
            if again.status is not LawStatus.VIOLATED or again.checks != report.checks:
                raise AssertionError(f"violation of {law} did not replay identically (trial {i})")
            return report
    return None


__all__ = [
    "Check",
    "LAW_IDS",
    "LawReport",
    "LawStatus",
    "check_additive_collapse",
    "check_delta_shift",
    "check_example5",
    "check_homogeneity",
    "check_monotonicity",
    "check_nesting",
    "check_pan_eq_concave",
    "check_pan_linearity",
    "check_restriction",
    "check_superadditivity",
    "check_uniform_band",
    "example5_instance",
    "falsify",
    "replay",
    "run_law_suite",
    "summarize",
]
