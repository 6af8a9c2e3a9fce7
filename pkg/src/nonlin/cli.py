"""Command-line front end.

Exit codes: 0 success (a value was computed, a suite ran), 1 input error,
2 semantic refusal (infeasible or unsupported integral).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .caps import SizeCapError
from .convergence import DEFAULT_NMAX, DEFAULT_TOL, SequenceSpec, run_convergence
from .engine import IntegralSpec, Status, integrate
from .io import InstanceError, dumps, load, parse_sequence
from .laws import LAW_IDS, REQUIRED_KIND, example5_measure, run_law_suite, summarize
from .measure import MEASURE_KINDS, is_additive, is_subadditive
from .oracle import covering_suite, partition_suite
from .rational import format_rational, parse_rational

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REFUSED = 2


def _err(msg: str) -> None:
    print(f"nonlin: {msg}", file=sys.stderr)


def _input_path(args) -> str | None:
    return args.input or args.path


def _spec(args) -> IntegralSpec:
    try:
        return IntegralSpec.parse(args.family, args.direction)
    except ValueError as e:
        raise InstanceError(str(e)) from None


def _write(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_integrate(args) -> int:
    path = _input_path(args)
    if path is None:
        raise InstanceError("integrate needs an input file")
    problem = load(path)
    if problem.f is None:
        raise InstanceError(f"{path}: f: missing field (integrate needs a function)")
    spec = _spec(args)
    result = integrate(problem.measure, problem.f, spec)
    out: dict = {"status": result.status.value}
    if result.status is Status.VALUE:
        out["value"] = format_rational(result.value)
        if args.witness:
            out["witness"] = result.witness.to_json()
    else:
        out["message"] = result.message
    if args.format == "csv":
        _write(f"status,value\n{out['status']},{out.get('value', '')}\n", args.output)
    else:
        _write(dumps(out) + "\n", args.output)
    if result.status is Status.VALUE:
        return EXIT_OK
    if result.status is Status.UNSUPPORTED:
        _err(result.message)
    return EXIT_REFUSED


def cmd_validate(args) -> int:
    path = _input_path(args)
    if path is None:
        raise InstanceError("validate needs an input file")
    problem = load(path)
    m = problem.measure
    info = {
        "status": "ok",
        "n": m.n,
        "subadditive": is_subadditive(m),
        "additive": is_additive(m),
        "has_f": problem.f is not None,
        "simple_functions": len(problem.simple_functions),
    }
    print(dumps(info))
    return EXIT_OK


def cmd_laws(args) -> int:
    if args.law not in LAW_IDS:
        raise InstanceError(f"unknown law id {args.law!r}; valid ids: {', '.join(LAW_IDS)}")
    reports = run_law_suite(
        args.law,
        trials=args.trials,
        seed=args.seed,
        n_max=args.n,
        measure_kind=args.measure_kind,
        drop_hypotheses=True if args.drop_hypotheses else None,
        big_n=args.N,
    )
    lines = "".join(dumps(r) + "\n" for r in reports)
    if args.output:
        Path(args.output).write_text(lines, encoding="utf-8")
    counts = summarize(reports)
    kind = args.measure_kind or REQUIRED_KIND.get(args.law, "general")
    dropped = args.law != "example5" and any(not r.instance.get("enforce_hypotheses", True) for r in reports)
    print(f"law {args.law}: {len(reports)} instance(s), seed {args.seed}, n <= {args.n}, measures: {kind}")
    if dropped:
        print("measure hypotheses dropped (counterexample search)")
    for status, count in counts.items():
        print(f"  {status:<20} {count}")
    if args.law == "example5" and reports:
        print(f"  note: {reports[0].note}")
    return EXIT_OK


def _sequence(args, problem) -> SequenceSpec:
    n = problem.measure.n if problem else None
    f = problem.f if problem else None
    kind = args.sequence
    if kind is None:
        if problem and problem.sequence is not None:
            return problem.sequence
        raise InstanceError("no sequence: pass --sequence or put a 'sequence' object in the input file")
    if kind == "example5":
        return SequenceSpec.example5(args.N)
    if f is None:
        raise InstanceError(f"--sequence {kind} needs an input file with f")
    if kind == "constant":
        return SequenceSpec.explicit([f], f)
    raw = {"kind": kind, "r": args.r}
    if args.g is not None:
        raw["g"] = [s for s in args.g.split(",")]
    return parse_sequence(raw, n, f, path="--sequence")


def cmd_converge(args) -> int:
    path = _input_path(args)
    problem = load(path) if path else None
    seq = _sequence(args, problem)
    if seq.kind == "example5":
        m = example5_measure(seq.big_n)
    elif problem is None:
        raise InstanceError("converge needs an input file unless --sequence example5 is used")
    else:
        m = problem.measure
    spec = _spec(args)
    try:
        tol = parse_rational(args.tol)
    except (TypeError, ValueError) as e:
        raise InstanceError(f"--tol: {e}") from None
    report = run_convergence(m, seq, spec, n_max=args.nmax, tol=tol)
    if args.format == "json":
        _write(dumps(report) + "\n", args.output)
    else:
        _write(report.to_csv(), args.output)
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    summaries = [partition_suite(args.n, args.trials, args.seed), covering_suite(args.n, args.trials, args.seed)]
    ran = False
    bad = 0
    for s in summaries:
        if s.skipped:
            _err(s.skipped)
            continue
        ran = True
        bad += len(s.mismatches)
        print(f"{s.suite}: n={s.n} compared={s.compared} mismatches={len(s.mismatches)}")
        for mm in s.mismatches[:5]:
            print("  " + json.dumps(mm, sort_keys=True))
    if not ran:
        _err(f"no oracle can run at n={args.n}")
        return EXIT_INPUT
    return EXIT_OK if bad == 0 else EXIT_REFUSED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nonlin", description="Exact decomposition-type integrals on finite ground sets.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_input(sp):
        sp.add_argument("path", nargs="?", help="problem file (JSON)")
        sp.add_argument("--input", "-i", help="problem file (JSON); same as the positional argument")

    def add_spec(sp, family="P+", direction="lower"):
        sp.add_argument("--family", default=family, help="P+, P±/P+-, C+, C±, with optional _mu suffix")
        sp.add_argument("--direction", default=direction, choices=("lower", "upper"))

    sp = sub.add_parser("integrate", help="compute one integral")
    add_input(sp)
    add_spec(sp)
    sp.add_argument("--witness", action="store_true", help="include the optimal simple function")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_integrate)

    sp = sub.add_parser("validate", help="parse and validate a problem file")
    add_input(sp)
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("laws", help="run a randomized law suite")
    sp.add_argument("law", help=", ".join(LAW_IDS))
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n", type=int, default=6, help="largest ground set size")
    sp.add_argument("--measure-kind", choices=MEASURE_KINDS)
    sp.add_argument("--drop-hypotheses", action="store_true", help="test the law even when its measure hypothesis fails")
    sp.add_argument("--N", type=int, default=6, help="truncation for the example5 law")
    sp.add_argument("--output", "-o", help="JSON-lines report file")
    sp.set_defaults(func=cmd_laws)

    sp = sub.add_parser("converge", help="run a convergence experiment")
    add_input(sp)
    add_spec(sp)
    sp.add_argument("--sequence", choices=("scaled", "shifted", "explicit", "example5", "constant"))
    sp.add_argument("--r", default="1/2")
    sp.add_argument("--g", help="comma-separated rationals for the shifted sequence (default chi_X)")
    sp.add_argument("--N", type=int, default=6)
    sp.add_argument("--nmax", type=int, default=DEFAULT_NMAX)
    sp.add_argument("--tol", default=format_rational(DEFAULT_TOL))
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.add_argument("--output", "-o")
    sp.set_defaults(func=cmd_converge)

    sp = sub.add_parser("oracle-check", help="cross-check solvers against exhaustive oracles")
    sp.add_argument("--n", type=int, default=3)
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_oracle_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InstanceError, SizeCapError, ValueError) as e:
        _err(str(e))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
