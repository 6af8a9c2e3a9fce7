"""Randomized law suites and a counterexample search.

Each law is checked exactly on random instances; reports are JSON and replay
to the same verdict.
"""

from nonlin.io import dumps
from nonlin.laws import LAW_IDS, falsify, replay, run_law_suite, summarize

print("law ids:", ", ".join(LAW_IDS))
for law in ("monotonicity", "delta_shift", "superadditivity", "nesting", "pan_linearity"):
    reports = run_law_suite(law, trials=200, seed=1, n_max=5)
    print(f"  {law:<16} {summarize(reports)}")

print("\nPan linearity needs a sub-additive measure. Dropping that hypothesis:")
hit = falsify("pan_linearity", measure_kind="general", trials=1000, seed=0)
print(dumps(hit)[:300], "...")
print("replays as:", replay(hit).status.value)
