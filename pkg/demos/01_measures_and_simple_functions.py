"""Monotone measures, simple functions, and why the representation matters.

A simple function is a list of (coefficient, set) pairs. Two lists can describe
the same pointwise function yet have different basic sums under a
non-additive measure.
"""

from nonlin import MeasurableFn, SimpleFunction, basic_sum, classify, make_measure
from nonlin.measure import format_set, is_subadditive, subadditivity_violation

# Two points; every nonempty set has measure 1.
mu = make_measure(2, [0, 1, 1, 1])
print("mu on subsets:", {format_set(s): str(mu(s)) for s in range(4)})
print("sub-additive?", is_subadditive(mu))

split = SimpleFunction.of([(1, [0]), (1, [1])])
whole = SimpleFunction.of([(1, [0, 1])])
print("\nboth represent f =", [str(v) for v in split.pointwise(2)], "and", [str(v) for v in whole.pointwise(2)])
print("basic sum of the split form:", basic_sum(mu, split))
print("basic sum of the single block:", basic_sum(mu, whole))

overlap = SimpleFunction.of([(1, [0, 1]), (1, [1])])
print("\nfamilies of the split form:  ", sorted(t.name for t in classify(split, 2)))
print("families of an overlapping one:", sorted(t.name for t in classify(overlap, 2)))

# A measure that only charges pairs fails sub-additivity on the singletons.
pairs_only = make_measure(2, [0, 0, 0, 1])
a, b = subadditivity_violation(pairs_only)
print(f"\nmu' breaks sub-additivity on {format_set(a)} and {format_set(b)}")
print("f = (1, 2) serialized:", MeasurableFn.of([1, 2]).to_json())
