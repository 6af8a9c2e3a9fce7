"""Lower and upper integrals over partitions and coverings, with witnesses.

Named integrals: Pan = lower over non-negative partitions, SD = lower over
non-negative coverings, and the two upper integrals over the same families.
"""

from nonlin import CONCAVE, CONVEX, PAN, SD, IntegralSpec, MeasurableFn, integrate, make_measure
from nonlin.simple import P_PM, Direction


def show(label, result):
    if result.ok:
        print(f"  {label:<8} = {result.value}   witness {result.witness.to_json()}")
    else:
        print(f"  {label:<8} : {result.status.value} ({result.message})")


mu = make_measure(2, [0, 1, 1, 1])
f = MeasurableFn.of([1, 1])
print("mu(nonempty) = 1, f = (1, 1)")
for label, spec in (("Pan", PAN), ("SD", SD), ("P+ upper", CONCAVE), ("C+ upper", CONVEX)):
    show(label, integrate(mu, f, spec))
print("  note the lower covering integral exceeds the upper one here (2 > 1)")

mu2 = make_measure(2, [0, 0, 0, 1])
f2 = MeasurableFn.of([1, 2])
print("\nmu charges only the full set, f = (1, 2)")
for label, spec in (("Pan", PAN), ("SD", SD), ("P+ upper", CONCAVE), ("C+ upper", CONVEX)):
    show(label, integrate(mu2, f2, spec))

print("\nsigned function (-1, 1)")
g = MeasurableFn.of([-1, 1])
show("P± lower", integrate(mu, g, IntegralSpec(P_PM, Direction.LOWER)))
show("Pan", integrate(mu, g, PAN))
show("C± lower", integrate(mu, g, IntegralSpec.parse("C±", "lower")))
