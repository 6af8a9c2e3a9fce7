"""Reading and writing problem files.

A problem file is JSON::

    {"n": 2, "mu": ["0", "1", "1", "1"], "f": ["1", "1"],
     "g": [...], "simple_functions": [[["1/2", [0, 1]], ...], ...],
     "sequence": {"kind": "scaled", "r": "1/2"}}

Only ``n`` and ``mu`` are required; ``mu[i]`` is the value at bitmask ``i``.
Rationals are strings ``"p/q"`` or integers. Errors name the JSON line and
column for syntax problems and the field path for content problems.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .caps import SizeCapError
from .convergence import SEQUENCE_KINDS, SequenceSpec
from .measure import MeasureError, MonotoneMeasure, make_measure
from .rational import parse_rational
from .simple import MeasurableFn, SimpleFunction


class InstanceError(ValueError):
    pass


@dataclass
class Problem:
    measure: MonotoneMeasure
    f: MeasurableFn | None = None
    g: MeasurableFn | None = None
    simple_functions: list[SimpleFunction] = field(default_factory=list)
    sequence: SequenceSpec | None = None

    def to_json(self) -> dict:
        out = self.measure.to_json()
        if self.f is not None:
            out["f"] = self.f.to_json()
        if self.g is not None:
            out["g"] = self.g.to_json()
        if self.simple_functions:
            out["simple_functions"] = [phi.to_json() for phi in self.simple_functions]
        if self.sequence is not None:
            seq = self.sequence.to_json()
            seq.pop("f", None)
            out["sequence"] = seq
        return out


def dumps(obj) -> str:
    """Canonical JSON text (sorted keys) so identical objects give identical bytes."""
    if hasattr(obj, "to_json"):
        obj = obj.to_json()
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def _rationals(values, path: str, length: int | None = None) -> list:
    if not isinstance(values, list):
        raise InstanceError(f"{path}: expected a list, got {type(values).__name__}")
    if length is not None and len(values) != length:
        raise InstanceError(f"{path}: expected {length} entries, got {len(values)}")
    out = []
    for i, v in enumerate(values):
        try:
            out.append(parse_rational(v))
        except (TypeError, ValueError) as e:
            raise InstanceError(f"{path}[{i}]: {e}") from None
    return out


def _fn(values, path: str, n: int) -> MeasurableFn:
    return MeasurableFn(tuple(_rationals(values, path, n)))


def _simple(data, path: str, n: int) -> SimpleFunction:
    if not isinstance(data, list):
        raise InstanceError(f"{path}: expected a list of [coefficient, [points]] pairs")
    pairs = []
    for k, item in enumerate(data):
        if not (isinstance(item, list) and len(item) == 2 and isinstance(item[1], list)):
            raise InstanceError(f"{path}[{k}]: expected [coefficient, [points]]")
        try:
            a = parse_rational(item[0])
        except (TypeError, ValueError) as e:
            raise InstanceError(f"{path}[{k}][0]: {e}") from None
        mask = 0
        for j, p in enumerate(item[1]):
            if not isinstance(p, int) or isinstance(p, bool) or not 0 <= p < n:
                raise InstanceError(f"{path}[{k}][1][{j}]: point must be an integer in 0..{n - 1}, got {p!r}")
            mask |= 1 << p
        pairs.append((a, mask))
    return SimpleFunction(tuple(pairs))


def parse_sequence(data, n: int, f: MeasurableFn | None, path: str = "sequence") -> SequenceSpec:
    if not isinstance(data, dict) or "kind" not in data:
        raise InstanceError(f"{path}: expected an object with a 'kind' field")
    kind = data["kind"]
    if kind not in SEQUENCE_KINDS:
        raise InstanceError(f"{path}.kind: unknown sequence kind {kind!r}; expected one of {', '.join(SEQUENCE_KINDS)}")
    try:
        if kind == "example5":
            return SequenceSpec.example5(int(data["N"]))
        if kind == "explicit":
            terms = [_fn(t, f"{path}.terms[{i}]", n) for i, t in enumerate(data.get("terms", []))]
            limit = _fn(data["limit"], f"{path}.limit", n) if "limit" in data else None
            return SequenceSpec.explicit(terms, limit)
        base = _fn(data["f"], f"{path}.f", n) if "f" in data else f
        if base is None:
            raise InstanceError(f"{path}: {kind} sequence needs 'f' (in the sequence or at top level)")
        r = parse_rational(data.get("r", "1/2"))
        if kind == "scaled":
            return SequenceSpec.scaled(base, r)
        g = _fn(data["g"], f"{path}.g", n) if "g" in data else MeasurableFn.constant(n, 1)
        return SequenceSpec.shifted(base, g, r)
    except KeyError as e:
        raise InstanceError(f"{path}: missing field {e.args[0]!r}") from None
    except InstanceError:
        raise
    except (TypeError, ValueError) as e:
        raise InstanceError(f"{path}: {e}") from None


def parse_problem(data) -> Problem:
    if not isinstance(data, dict):
        raise InstanceError("top level: expected a JSON object")
    if "n" not in data:
        raise InstanceError("n: missing field")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InstanceError(f"n: expected an integer >= 1, got {n!r}")
    if "mu" not in data:
        raise InstanceError("mu: missing field")
    mu = _rationals(data["mu"], "mu", 1 << n)
    try:
        measure = make_measure(n, mu)
    except (MeasureError, SizeCapError) as e:
        raise InstanceError(f"mu: {type(e).__name__}: {e}") from None
    f = _fn(data["f"], "f", n) if "f" in data else None
    g = _fn(data["g"], "g", n) if "g" in data else None
    sfs = [_simple(d, f"simple_functions[{i}]", n) for i, d in enumerate(data.get("simple_functions", []))]
    seq = parse_sequence(data["sequence"], n, f) if "sequence" in data else None
    return Problem(measure, f, g, sfs, seq)


def loads(text: str, source: str = "<input>") -> Problem:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from None
    try:
        return parse_problem(data)
    except InstanceError as e:
        raise InstanceError(f"{source}: {e}") from None


def load(path: str | Path) -> Problem:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InstanceError(f"{path}: {e.strerror}") from None
    return loads(text, str(path))
