from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from nonlin.measure import make_measure
from nonlin.simple import MeasurableFn

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def i1():
    return make_measure(2, [0, 1, 1, 1])


@pytest.fixture
def i2():
    return make_measure(2, [0, 0, 0, 1])


def rationals(lo=-12, hi=12):
    return st.builds(Fraction, st.integers(lo, hi), st.sampled_from([1, 2, 3, 4, 6]))


def functions(n, lo=0, hi=12):
    return st.lists(rationals(lo, hi), min_size=n, max_size=n).map(lambda v: MeasurableFn(tuple(v)))
