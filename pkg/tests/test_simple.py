from fractions import Fraction

from hypothesis import given, strategies as st

from nonlin.measure import make_measure, random_measure
from nonlin.simple import (
    ALL_FAMILIES,
    C_PLUS,
    C_PLUS_MU,
    C_PM,
    C_PM_MU,
    P_PLUS,
    P_PLUS_MU,
    P_PM,
    P_PM_MU,
    FamilyTag,
    MeasurableFn,
    SimpleFunction,
    Structure,
    above,
    basic_sum,
    below,
    classify,
    evaluate,
    normalize_covering,
)

from conftest import rationals


def test_eval():
    assert evaluate(SimpleFunction.of([(1, [0, 1]), (2, [1])]), 1) == 3
    assert evaluate(SimpleFunction(), 0) == 0
    assert evaluate(SimpleFunction.of([("1/2", [0]), ("-1/2", [0])]), 0) == 0


def test_basic_sum_distinguishes_representations(i1):
    split = SimpleFunction.of([(1, [0]), (1, [1])])
    whole = SimpleFunction.of([(1, [0, 1])])
    assert split.pointwise(2) == whole.pointwise(2)
    assert basic_sum(i1, split) == 2
    assert basic_sum(i1, whole) == 1
    assert basic_sum(i1, SimpleFunction()) == 0


def test_classify_examples():
    assert classify(SimpleFunction.of([(1, [0]), (2, [1])]), 2) == frozenset(ALL_FAMILIES)
    overlap = classify(SimpleFunction.of([(1, [0, 1]), (1, [1])]), 2)
    assert overlap == {C_PLUS, C_PM, C_PLUS_MU, C_PM_MU}
    signed = classify(SimpleFunction.of([(-1, [0]), (2, [1])]), 2)
    assert signed == {P_PM, C_PM, P_PM_MU, C_PM_MU}


def test_classify_tolerates_empty_blocks_and_rejects_gaps():
    assert P_PLUS in classify(SimpleFunction.of([(1, [0]), (5, []), (1, [1])]), 2)
    assert classify(SimpleFunction.of([(1, [0])]), 2) == frozenset()
    assert classify(SimpleFunction(), 1) == frozenset()


def test_below_above():
    one = MeasurableFn.of([1, 1])
    phi = SimpleFunction.of([(1, [0, 1])])
    assert below(phi, one) and above(phi, one)
    assert not below(SimpleFunction.of([(1, [0, 1]), (1, [1])]), one)
    zero = MeasurableFn.of([0, 0])
    assert below(SimpleFunction(), zero) and above(SimpleFunction(), zero)


def test_normalize_examples():
    assert normalize_covering(SimpleFunction.of([(1, [0]), (2, [0])])) == SimpleFunction.of([(3, [0])])
    assert normalize_covering(SimpleFunction.of([(1, [0]), (0, [1]), (1, [])])) == SimpleFunction.of([(1, [0])])
    assert normalize_covering(SimpleFunction()) == SimpleFunction()


def test_family_parse():
    assert FamilyTag.parse("P+") == P_PLUS
    assert FamilyTag.parse("p±") == P_PM
    assert FamilyTag.parse("P+-") == P_PM
    assert FamilyTag.parse("Cpm_mu") == C_PM_MU
    assert FamilyTag.parse("C+_μ") == C_PLUS_MU
    assert len(set(ALL_FAMILIES)) == 8
    for fam in ALL_FAMILIES:
        assert FamilyTag.parse(fam.name) == fam


def pairs(n):
    return st.lists(st.tuples(rationals(), st.integers(0, (1 << n) - 1)), max_size=6).map(
        lambda ps: SimpleFunction(tuple(ps))
    )


@given(st.data())
def test_normalize_preserves_values_and_sums(data):
    n = data.draw(st.integers(1, 4))
    phi = data.draw(pairs(n))
    m = random_measure(n, data.draw(st.integers(0, 1000)))
    psi = normalize_covering(phi)
    assert basic_sum(m, psi) == basic_sum(m, phi)
    assert psi.pointwise(n) == phi.pointwise(n)


@given(st.data())
def test_countable_tags_mirror_finite(data):
    n = data.draw(st.integers(1, 4))
    tags = classify(data.draw(pairs(n)), n)
    for t in tags:
        assert FamilyTag(t.structure, t.sign, not t.countable) in tags


@given(st.data())
def test_partition_means_each_point_once(data):
    n = data.draw(st.integers(1, 4))
    phi = data.draw(pairs(n))
    if any(t.structure is Structure.PARTITION for t in classify(phi, n)):
        for x in range(n):
            assert sum(1 for _, s in phi if s and s >> x & 1) == 1


def test_measurable_fn_ops():
    f = MeasurableFn.of([1, "1/2", 0])
    assert (f + f).values == (2, 1, 0)
    assert (2 * f).values == (2, 1, 0)
    assert f.shift(-1).clamp0().values == (0, 0, 0)
    assert f.restrict(0b101).values == (1, 0, 0)
    assert MeasurableFn.indicator(3, 0b110).values == (0, 1, 1)
    assert f.leq(f.shift(Fraction(1, 3)))
