"""Acceptance criteria, one test each, each printing a PASS or FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s -m acceptance``.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from nonlin.cli import main
from nonlin.convergence import DEFAULT_TOL, SequenceSpec, run_convergence
from nonlin.engine import CONCAVE, PAN, SD, integrate
from nonlin.io import dumps
from nonlin.laws import (
    LawStatus,
    example5_instance,
    falsify,
    random_fn,
    replay,
    run_law_suite,
    summarize,
)
from nonlin.measure import is_additive, is_subadditive, make_measure, random_measure
from nonlin.oracle import covering_suite, partition_suite
from nonlin.simple import MeasurableFn

pytestmark = pytest.mark.acceptance

UNCONDITIONAL = ("monotonicity", "homogeneity", "delta_shift", "restriction", "superadditivity", "uniform_band", "nesting")


@contextmanager
def criterion(capsys, label):
    start = time.perf_counter()
    detail = {}
    try:
        yield detail
    except BaseException:
        with capsys.disabled():
            print(f"\nFAIL  {label}  ({time.perf_counter() - start:.1f}s) {detail.get('msg', '')}")
        raise
    with capsys.disabled():
        print(f"\nPASS  {label}  ({time.perf_counter() - start:.1f}s) {detail.get('msg', '')}")


def test_c1_example5(capsys):
    with criterion(capsys, "1 example5 reproduction, N=2..8") as d:
        start = time.perf_counter()
        for big_n in range(2, 9):
            m, fs, chi0 = example5_instance(big_n)
            for f in fs:
                assert integrate(m, f, SD).value == 1
            assert integrate(m, chi0, SD).value == 0
        elapsed = time.perf_counter() - start
        d["msg"] = f"all exact; {elapsed:.1f}s < 60s"
        assert elapsed < 60


def test_c2_partition_oracle(capsys):
    with criterion(capsys, "2 partition DP = enumeration, n=2..5") as d:
        start = time.perf_counter()
        compared = 0
        for n in range(2, 6):
            s = partition_suite(n, trials=100, seed=2024)
            assert not s.skipped and s.compared == 400
            assert s.mismatches == []
            compared += s.compared
        elapsed = time.perf_counter() - start
        d["msg"] = f"{compared} comparisons; {elapsed:.1f}s < 30s"
        assert elapsed < 30


def test_c3_covering_oracle(capsys):
    with criterion(capsys, "3 covering simplex = basis enumeration, n=2,3") as d:
        start = time.perf_counter()
        compared = 0
        for n in (2, 3):
            s = covering_suite(n, trials=100, seed=2024)
            assert not s.skipped and s.compared == 200
            assert s.mismatches == []
            compared += s.compared
        elapsed = time.perf_counter() - start
        d["msg"] = f"{compared} comparisons; {elapsed:.1f}s < 30s"
        assert elapsed < 30


@pytest.mark.parametrize("law", UNCONDITIONAL)
def test_c4_unconditional_laws(capsys, law):
    with criterion(capsys, f"4 {law}: 1000 instances, n<=6") as d:
        reports = run_law_suite(law, trials=1000, seed=4, n_max=6)
        counts = summarize(reports)
        d["msg"] = str(counts)
        assert len(reports) == 1000
        assert counts["violated"] == 0
        # the instances must actually exercise the law, not skip it
        assert counts["holds"] >= 900


@pytest.mark.parametrize("law", ["pan_linearity", "pan_eq_concave"])
def test_c5_subadditive_laws(capsys, law):
    with criterion(capsys, f"5 {law}: 200 sub-additive instances") as d:
        reports = run_law_suite(law, trials=200, seed=5, n_max=6)
        assert all(is_subadditive(make_measure(r.instance["n"], r.instance["mu"])) for r in reports)
        counts = summarize(reports)
        d["msg"] = str(counts)
        assert counts == {"holds": 200, "violated": 0, "hypotheses-not-met": 0}


def test_c5_falsifier(capsys):
    with criterion(capsys, "5 falsifier finds pan_linearity violation on general measures") as d:
        hit = falsify("pan_linearity", measure_kind="general", trials=1000, seed=0)
        assert hit is not None
        d["msg"] = f"trial {hit.instance['trial']}: {hit.checks[0].lhs} != {hit.checks[0].rhs}"
        again = replay(hit)
        assert again.status is LawStatus.VIOLATED and again.checks == hit.checks


def _instances(tag, count):
    for i in range(count):
        rng = random.Random(f"acceptance:{tag}:{i}")
        n = rng.randint(1, 6)
        yield rng, random_measure(n, rng, rng.choice(("general", "subadditive", "additive"))), n


def test_c6a_scaled_closed_form(capsys):
    with criterion(capsys, "6a scaled sequences match (1-r^n) int f, n<=40") as d:
        count = 0
        for rng, m, n in _instances("6a", 30):
            f = random_fn(rng, n)
            r = rng.choice((Fraction(1, 2), Fraction(1, 3), Fraction(2, 3), Fraction(9, 10)))
            spec = rng.choice((PAN, SD, CONCAVE))
            base = integrate(m, f, spec).value
            rep = run_convergence(m, SequenceSpec.scaled(f, r), spec, n_max=40)
            assert len(rep.rows) == 40
            for k, v in rep.rows:
                assert v == (1 - r**k) * base
                count += 1
        d["msg"] = f"{count} rows exact"


def test_c6b_shifted_decreasing(capsys):
    with criterion(capsys, "6b shifted sequences over P+/upper decrease to int f within 1e-9") as d:
        for rng, m, n in _instances("6b", 30):
            f, g = random_fn(rng, n), random_fn(rng, n)
            r = rng.choice((Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)))
            rep = run_convergence(m, SequenceSpec.shifted(f, g, r), CONCAVE, n_max=40)
            vals = [v for _, v in rep.rows]
            assert all(b <= a for a, b in zip(vals, vals[1:]))
            assert rep.limit_value == integrate(m, f, CONCAVE).value
            assert rep.gap <= DEFAULT_TOL
        d["msg"] = "30 sequences"


def test_c6c_decreasing_to_zero(capsys):
    with criterion(capsys, "6c sequences decreasing to 0 over P+/lower reach 0 within 1e-9") as d:
        for rng, m, n in _instances("6c", 30):
            g = random_fn(rng, n)
            r = rng.choice((Fraction(1, 2), Fraction(1, 3)))
            seq = SequenceSpec.shifted(MeasurableFn.constant(n, 0), g, r)
            rep = run_convergence(m, seq, PAN, n_max=40)
            vals = [v for _, v in rep.rows]
            assert all(b <= a for a, b in zip(vals, vals[1:]))
            assert rep.limit_value == 0 and vals[-1] <= DEFAULT_TOL
        d["msg"] = "30 sequences"


def test_c7_additive_collapse(capsys):
    with criterion(capsys, "7 additive collapse: 200 additive instances") as d:
        reports = run_law_suite("additive_collapse", trials=200, seed=7, n_max=6)
        assert all(is_additive(make_measure(r.instance["n"], r.instance["mu"])) for r in reports)
        counts = summarize(reports)
        d["msg"] = str(counts)
        assert counts == {"holds": 200, "violated": 0, "hypotheses-not-met": 0}


def test_c8_determinism(capsys, tmp_path):
    with criterion(capsys, "8 same seed gives byte-identical reports") as d:
        files = []
        for k in range(2):
            law_file = tmp_path / f"laws{k}.jsonl"
            conv_file = tmp_path / f"conv{k}.csv"
            inst = tmp_path / "i1.json"
            inst.write_text('{"n": 2, "mu": ["0", "1", "1", "1"], "f": ["1", "1"]}')
            assert main(["laws", "uniform_band", "--trials", "200", "--seed", "11", "--output", str(law_file)]) == 0
            assert main(["converge", str(inst), "--sequence", "shifted", "--direction", "upper", "--output", str(conv_file)]) == 0
            oracle = dumps([partition_suite(4, 20, 11).__dict__, covering_suite(3, 20, 11).__dict__])
            files.append((law_file.read_bytes(), conv_file.read_bytes(), oracle))
        capsys.readouterr()
        assert files[0] == files[1]
        other = tmp_path / "other.jsonl"
        main(["laws", "uniform_band", "--trials", "200", "--seed", "12", "--output", str(other)])
        capsys.readouterr()
        assert other.read_bytes() != files[0][0]
        d["msg"] = "laws, converge and oracle reports identical across runs"
