"""Size limits for the exponential parts of the package.

``NONLIN_SIZE_CAP`` overrides the ground-set caps (measure storage, partition
DP, covering LP). Oracle caps are fixed: they guard brute-force checks whose
cost grows much faster than the solvers they verify.
"""

from __future__ import annotations

import os

MEASURE_CAP = 12
PARTITION_DP_CAP = 12
COVERING_LP_CAP = 10

PARTITION_ORACLE_CAP = 5
BASIS_ORACLE_COLUMN_CAP = 16

ENV_VAR = "NONLIN_SIZE_CAP"


class SizeCapError(ValueError):
    """Raised when an instance is larger than a configured limit."""


class OracleTooLarge(SizeCapError):
    """Raised when an exhaustive oracle is asked to check an oversized instance."""


def size_cap(default: int) -> int:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise SizeCapError(f"{ENV_VAR}={raw!r} is not an integer") from None
    if value < 1:
        raise SizeCapError(f"{ENV_VAR} must be >= 1, got {value}")
    return value


def check_size(n: int, default: int, what: str) -> None:
    cap = size_cap(default)
    if n > cap:
        raise SizeCapError(f"{what}: n={n} exceeds the size cap {cap} (set {ENV_VAR} to raise it)")
