"""Convergence experiments with exact rational tables."""

from nonlin import CONCAVE, PAN, SD, MeasurableFn, make_measure
from nonlin.convergence import SequenceSpec, run_convergence
from nonlin.laws import example5_measure

mu = make_measure(2, [0, 1, 1, 1])
f = MeasurableFn.of([1, 1])

rep = run_convergence(mu, SequenceSpec.scaled(f, "1/2"), PAN, n_max=40)
print("scaled (1 - 2^-n) f under Pan: first rows", [str(v) for _, v in rep.rows[:4]])
print("  verdict", rep.verdict, "from n =", rep.converged_at)

rep = run_convergence(mu, SequenceSpec.shifted(f, f, "1/2"), CONCAVE)
print("shifted f + 2^-n under the P+ upper integral:", rep.direction, rep.verdict, "limit", rep.limit_value)

rep = run_convergence(example5_measure(5), SequenceSpec.example5(5), SD)
print("\ncounterexample sequence under SD:")
print(rep.to_csv())
for t in rep.theorems:
    failed = [h.name for h in t.hypotheses if not h.met]
    print(f"  {t.theorem}: {'met' if t.met else 'not met: ' + ', '.join(failed)}")
