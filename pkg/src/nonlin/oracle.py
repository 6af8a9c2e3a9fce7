"""Randomized cross-checks of the solvers against their exhaustive oracles."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .caps import BASIS_ORACLE_COLUMN_CAP, PARTITION_ORACLE_CAP, OracleTooLarge
from .engine import Status, brute_force_partition_oracle, covering_integral, covering_lp, partition_integral
from .laws import random_fn
from .lp import enumerate_basic_solutions
from .measure import MEASURE_KINDS, random_measure
from .simple import Direction, Sign


@dataclass
class OracleSummary:
    suite: str
    n: int
    compared: int = 0
    mismatches: list[dict] = field(default_factory=list)
    skipped: str = ""

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _instance(seed: int, index: int, n: int):
    rng = random.Random(f"oracle:{seed}:{n}:{index}")
    m = random_measure(n, rng, rng.choice(MEASURE_KINDS))
    return m, random_fn(rng, n, signed=rng.random() < 0.3)


def partition_suite(n: int, trials: int = 100, seed: int = 0) -> OracleSummary:
    """DP against explicit enumeration of all set partitions, all four partition specs."""
    out = OracleSummary("partition-dp-vs-enumeration", n)
    if n > PARTITION_ORACLE_CAP:
        out.skipped = f"partition oracle skipped: n={n} > {PARTITION_ORACLE_CAP}"
        return out
    for i in range(trials):
        m, f = _instance(seed, i, n)
        for sign in Sign:
            for d in Direction:
                r = partition_integral(m, f, sign, d)
                got = r.value if r.status is Status.VALUE else None
                want = brute_force_partition_oracle(m, f, sign, d)
                out.compared += 1
                if got != want:
                    out.mismatches.append(
                        {"trial": i, "sign": sign.value, "direction": d.value, "dp": str(got), "oracle": str(want), "mu": m.to_json(), "f": f.to_json()}
                    )
    return out


def covering_suite(n: int, trials: int = 100, seed: int = 0, column_cap: int = BASIS_ORACLE_COLUMN_CAP) -> OracleSummary:
    """Simplex against the best basic feasible solution, both covering directions."""
    out = OracleSummary("covering-simplex-vs-bases", n)
    columns = (1 << n) - 1 + n
    if columns > column_cap:
        out.skipped = f"basis-enumeration oracle skipped: {columns} columns at n={n} exceed the cap {column_cap}"
        return out
    for i in range(trials):
        m, f = _instance(seed, i, n)
        for d in Direction:
            r = covering_integral(m, f, d)
            got = r.value if r.status is Status.VALUE else None
            try:
                bases = enumerate_basic_solutions(covering_lp(m, f, d), column_cap)
            except OracleTooLarge as e:  # pragma: no cover - guarded above
                out.skipped = str(e)
                return out
            vals = [v for v, _ in bases]
            want = (max(vals) if d is Direction.LOWER else min(vals)) if vals else None
            out.compared += 1
            if got != want:
                out.mismatches.append(
                    {"trial": i, "direction": d.value, "simplex": str(got), "oracle": str(want), "mu": m.to_json(), "f": f.to_json()}
                )
    return out
