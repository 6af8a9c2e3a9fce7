from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nonlin.caps import OracleTooLarge, SizeCapError
from nonlin.engine import (
    CONCAVE,
    CONVEX,
    PAN,
    SD,
    IntegralSpec,
    Status,
    brute_force_partition_oracle,
    integrate,
    partition_integral,
)
from nonlin.laws import example5_measure, example5_term, example5_witness
from nonlin.measure import make_measure, random_measure
from nonlin.simple import (
    ALL_FAMILIES,
    C_PM,
    C_PM_MU,
    P_PLUS,
    P_PM,
    Direction,
    MeasurableFn,
    Sign,
    SimpleFunction,
    above,
    basic_sum,
    below,
    classify,
)

from conftest import functions, rationals

SUPPORTED = [IntegralSpec(fam, d) for fam in ALL_FAMILIES if fam.finite_twin != C_PM for d in Direction]


def test_i1_pan_and_convex(i1):
    r = integrate(i1, MeasurableFn.of([1, 1]), PAN)
    assert r.value == 2
    assert r.witness == SimpleFunction.of([(1, [0]), (1, [1])])
    r = integrate(i1, MeasurableFn.of([1, 1]), CONVEX)
    assert r.value == 1
    assert r.witness == SimpleFunction.of([(1, [0, 1])])


def test_lower_can_exceed_upper(i1):
    f = MeasurableFn.of([1, 1])
    assert integrate(i1, f, SD).value > integrate(i1, f, CONVEX).value


def test_i2_values(i2):
    f = MeasurableFn.of([1, 2])
    r = integrate(i2, f, CONCAVE)
    assert r.value == 0 and r.witness == SimpleFunction.of([(1, [0]), (2, [1])])
    assert integrate(i2, f, PAN).value == 1
    r = integrate(i2, f, SD)
    assert r.value == 1 and r.witness == SimpleFunction.of([(1, [0, 1])])
    assert integrate(i2, f, CONVEX).value == 0


def test_signed_partition(i1):
    r = integrate(i1, MeasurableFn.of([-1, 1]), IntegralSpec(P_PM, Direction.LOWER))
    assert r.value == 0
    assert r.witness == SimpleFunction.of([(-1, [0]), (1, [1])])


def test_refusals(i1):
    neg = MeasurableFn.of([-1, 1])
    assert integrate(i1, neg, PAN).status is Status.INFEASIBLE
    assert integrate(i1, neg, SD).status is Status.INFEASIBLE
    for fam in (C_PM, C_PM_MU):
        for d in Direction:
            assert integrate(i1, neg, IntegralSpec(fam, d)).status is Status.UNSUPPORTED


def test_convex_with_nonpositive_f(i1):
    r = integrate(i1, MeasurableFn.of([-1, 0]), CONVEX)
    assert r.value == 0 and r.witness == SimpleFunction.of([(0, [0, 1])])


def test_truncated_example5_pan_of_point_indicator():
    m = example5_measure(2)
    assert integrate(m, MeasurableFn.of([1, 0, 0]), PAN).value == 0
    assert brute_force_partition_oracle(m, MeasurableFn.of([1, 0, 0]), Sign.NONNEGATIVE, Direction.LOWER) == 0


@pytest.mark.parametrize("big_n", [1, 2, 5])
def test_example5_sd_value(big_n):
    m = example5_measure(big_n)
    for n in range(1, big_n + 1):
        assert integrate(m, example5_term(big_n, n), SD).value == 1


def test_example5_witness_from_construction():
    m = example5_measure(6)
    phi = example5_witness(4)
    assert phi == SimpleFunction.of([(Fraction(1, 4), [0, k]) for k in range(1, 5)])
    assert below(phi, example5_term(6, 4)) and basic_sum(m, phi) == 1


def test_oracle_examples(i1, i2):
    assert brute_force_partition_oracle(i1, MeasurableFn.of([1, 1]), Sign.NONNEGATIVE, Direction.LOWER) == 2
    assert brute_force_partition_oracle(i2, MeasurableFn.of([1, 2]), Sign.NONNEGATIVE, Direction.UPPER) == 0
    one = make_measure(1, [0, "3/2"])
    for s in Sign:
        for d in Direction:
            assert brute_force_partition_oracle(one, MeasurableFn.of(["2/3"]), s, d) == 1
    with pytest.raises(OracleTooLarge):
        brute_force_partition_oracle(random_measure(6, 0), MeasurableFn.constant(6, 1), Sign.NONNEGATIVE, Direction.LOWER)


def test_size_caps(monkeypatch):
    m = random_measure(4, 1)
    f = MeasurableFn.constant(4, 1)
    monkeypatch.setenv("NONLIN_SIZE_CAP", "3")
    with pytest.raises(SizeCapError):
        partition_integral(m, f, Sign.NONNEGATIVE, Direction.LOWER)
    with pytest.raises(SizeCapError):
        integrate(m, f, SD)


def test_shape_mismatch(i1):
    with pytest.raises(ValueError):
        integrate(i1, MeasurableFn.of([1, 1, 1]), PAN)


@given(st.integers(1, 5), st.integers(0, 10**6), st.sampled_from(SUPPORTED))
def test_zero_function(n, seed, spec):
    r = integrate(random_measure(n, seed), MeasurableFn.constant(n, 0), spec)
    assert r.status is Status.VALUE and r.value == 0


@given(st.data())
def test_witness_validity(data):
    n = data.draw(st.integers(1, 4))
    m = random_measure(n, data.draw(st.integers(0, 10**6)), data.draw(st.sampled_from(["general", "subadditive"])))
    spec = data.draw(st.sampled_from(SUPPORTED))
    lo = -6 if spec.family.sign is Sign.SIGNED or spec.direction is Direction.UPPER else 0
    f = data.draw(functions(n, lo, 8))
    r = integrate(m, f, spec)
    if r.status is not Status.VALUE:
        assert r.status is Status.INFEASIBLE and not f.is_nonnegative()
        return
    assert spec.family in classify(r.witness, n)
    assert (below if spec.direction is Direction.LOWER else above)(r.witness, f)
    assert basic_sum(m, r.witness) == r.value


@given(st.integers(1, 5), st.integers(0, 10**6), st.data())
def test_dp_equals_oracle(n, seed, data):
    m = random_measure(n, seed)
    f = data.draw(functions(n, -5, 8))
    for s in Sign:
        for d in Direction:
            r = partition_integral(m, f, s, d)
            assert (r.value if r.status is Status.VALUE else None) == brute_force_partition_oracle(m, f, s, d)


@given(st.integers(1, 5), st.integers(0, 10**6), st.data())
def test_additive_collapse(n, seed, data):
    m = random_measure(n, seed, "additive")
    f = data.draw(functions(n, 0, 8))
    expected = sum((f.values[x] * m.singleton(x) for x in range(n)), Fraction(0))
    for spec in (PAN, SD, CONCAVE, CONVEX):
        assert integrate(m, f, spec).value == expected


@given(st.integers(1, 4), st.integers(0, 10**6), st.data())
def test_nesting(n, seed, data):
    m = random_measure(n, seed)
    f = data.draw(functions(n, 0, 8))
    assert integrate(m, f, PAN).value <= integrate(m, f, SD).value
    assert integrate(m, f, CONVEX).value <= integrate(m, f, CONCAVE).value


@given(st.integers(1, 4), st.integers(0, 10**6), st.data())
def test_homogeneity(n, seed, data):
    m = random_measure(n, seed)
    f = data.draw(functions(n, 0, 8))
    c = data.draw(rationals(1, 9))
    for spec in (PAN, SD, CONCAVE, CONVEX):
        assert integrate(m, c * f, spec).value == c * integrate(m, f, spec).value


def test_countable_twin_matches_finite(i1):
    f = MeasurableFn.of([2, 3])
    for fam in ALL_FAMILIES:
        if fam.countable and fam.finite_twin != C_PM:
            for d in Direction:
                assert integrate(i1, f, IntegralSpec(fam, d)) == integrate(i1, f, IntegralSpec(fam.finite_twin, d))


def test_spec_parse():
    assert IntegralSpec.parse("P+", "lower") == PAN
    assert IntegralSpec.parse("P+", "Upper").family == P_PLUS
    with pytest.raises(ValueError):
        IntegralSpec.parse("Q+", "lower")
    with pytest.raises(ValueError):
        IntegralSpec.parse("P+", "sideways")
