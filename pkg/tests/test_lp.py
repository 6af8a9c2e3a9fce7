from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nonlin.caps import OracleTooLarge
from nonlin.engine import covering_lp
from nonlin.lp import GE, LE, DimensionMismatch, LinearProgram, LpStatus, enumerate_basic_solutions, solve
from nonlin.measure import make_measure
from nonlin.simple import Direction, MeasurableFn

from conftest import rationals

BOX = LinearProgram.build("max", [1, 1], [([1, 0], LE, 1), ([0, 1], LE, 1)])


def test_box():
    out = solve(BOX)
    assert out.status is LpStatus.OPTIMAL
    assert out.value == 2 and out.solution == (1, 1)


def test_unbounded():
    assert solve(LinearProgram.build("max", [1], [([-1], LE, 1)])).status is LpStatus.UNBOUNDED


def test_min_fraction():
    out = solve(LinearProgram.build("min", [1], [([1], GE, "2/3")]))
    assert out.status is LpStatus.OPTIMAL and out.value == Fraction(2, 3)


def test_infeasible():
    lp = LinearProgram.build("max", [1], [([1], LE, -1)])
    assert solve(lp).status is LpStatus.INFEASIBLE
    assert enumerate_basic_solutions(lp) == []


def test_box_enumeration_contains_optimum():
    sols = enumerate_basic_solutions(BOX)
    assert max(sols) == (2, (1, 1))


def test_i2_covering_lower_by_bases(i2):
    lp = covering_lp(i2, MeasurableFn.of([1, 2]), Direction.LOWER)
    assert max(v for v, _ in enumerate_basic_solutions(lp)) == 1


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        LinearProgram.build("max", [1, 1], [([1], LE, 1)])
    with pytest.raises(DimensionMismatch):
        LinearProgram.build("maximize", [1], [])
    with pytest.raises(DimensionMismatch):
        LinearProgram.build("max", [1], [([1], "==", 1)])


def test_oracle_cap():
    lp = LinearProgram.build("max", [1] * 10, [([1] * 10, LE, 1)] * 7)
    with pytest.raises(OracleTooLarge):
        enumerate_basic_solutions(lp)


def test_no_rows():
    assert solve(LinearProgram.build("min", [1, 2], [])).value == 0
    assert solve(LinearProgram.build("max", [0, 1], [])).status is LpStatus.UNBOUNDED


@st.composite
def small_lps(draw):
    """Small programs biased toward degeneracy: repeated rows and zero right-hand sides."""
    nv = draw(st.integers(1, 4))
    coeff = st.builds(Fraction, st.integers(-3, 3))
    base = draw(st.lists(st.tuples(st.lists(coeff, min_size=nv, max_size=nv), st.sampled_from([LE, GE]),
                                   st.one_of(st.just(Fraction(0)), rationals(-4, 4))), min_size=1, max_size=3))
    rows = list(base)
    for _ in range(draw(st.integers(0, 2))):
        rows.append(draw(st.sampled_from(base)))
    rows = rows[: 16 - nv]
    objective = draw(st.lists(coeff, min_size=nv, max_size=nv))
    # a cap row keeps most programs bounded so optimum comparisons are common
    if draw(st.booleans()) and len(rows) < 16 - nv:
        rows.append(([Fraction(1)] * nv, LE, draw(rationals(0, 6))))
    return LinearProgram.build(draw(st.sampled_from(["max", "min"])), objective, rows)


@given(small_lps())
def test_simplex_matches_basis_enumeration(lp):
    out = solve(lp)
    sols = enumerate_basic_solutions(lp)
    if not sols:
        assert out.status is LpStatus.INFEASIBLE
        return
    assert out.status is not LpStatus.INFEASIBLE
    if out.status is LpStatus.OPTIMAL:
        best = max(v for v, _ in sols) if lp.sense == "max" else min(v for v, _ in sols)
        assert out.value == best
        assert lp.is_feasible(out.solution)
        assert lp.value(out.solution) == out.value


@given(st.integers(1, 3), st.data())
def test_covering_lps_agree(n, data):
    from nonlin.measure import random_measure

    m = random_measure(n, data.draw(st.integers(0, 10**6)))
    f = MeasurableFn(tuple(data.draw(st.lists(rationals(0, 8), min_size=n, max_size=n))))
    for d in Direction:
        lp = covering_lp(m, f, d)
        vals = [v for v, _ in enumerate_basic_solutions(lp)]
        out = solve(lp)
        assert out.value == (max(vals) if d is Direction.LOWER else min(vals))


def test_degenerate_duplicates_terminate():
    row = ([1, 1, 1], LE, 0)
    lp = LinearProgram.build("max", [1, 2, 3], [row, row, row, ([1, -1, 0], GE, 0)])
    out = solve(lp)
    assert out.status is LpStatus.OPTIMAL and out.value == 0


def test_measure_example_lp_shape():
    lp = covering_lp(make_measure(2, [0, 1, 1, 1]), MeasurableFn.of([1, 1]), Direction.UPPER)
    assert lp.n_vars == 3 and len(lp.rows) == 2
