"""The truncated counterexample to exchanging limit and covering integral.

Points 0..N; mu(A) = 1 exactly when A contains 0 and some other point.
f_n is 1 at 0 and 1/n elsewhere, so f_n drops to the indicator of {0}.
Each f_n integrates to 1 while the limit integrates to 0.
"""

from nonlin import SD, basic_sum, integrate
from nonlin.laws import check_example5, example5_instance, example5_witness

N = 6
m, fs, limit = example5_instance(N)
for n, f in enumerate(fs, start=1):
    print(f"  n={n}: SD integral of f_n = {integrate(m, f, SD).value}")
print("  limit (indicator of {0}):", integrate(m, limit, SD).value)

phi = example5_witness(4)
print("\nhand-built witness for n=4:", phi.to_json(), "with basic sum", basic_sum(m, phi))

report = check_example5(N)
print("\nlaw check:", report.status.value, "|", report.note)
