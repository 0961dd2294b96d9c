"""
Evaluating the ten means and their power-type versions
=======================================================

Every mean here is symmetric and homogeneous, so it is enough to look at
M(x, 1).  The evaluator stays accurate right up to the diagonal and down
to x = 1e-12.
"""

import numpy as np

from powermeans import MeanKind, PowerTypeSpec, evaluate, mean_eval, power_type_eval

# the base means at (1, 2)
for kind in MeanKind:
    print(f"{kind.value:>2}(1, 2) = {mean_eval(kind, 1, 2).value:.16f}")

# %%
# Near the diagonal the defining formulas are 0/0; the evaluator is not.
for gap in (1e-4, 1e-8, 1e-12):
    v = mean_eval("P", 1.0, 1.0 + gap)
    print(f"P(1, 1 + {gap:g}) - 1 = {v.value - 1:.3e}   (bound {v.rel_error_bound:.1e})")

# %%
# Power-type means, M_p(a, b) = M(a**p, b**p) ** (1/p).  Large |p| does not
# overflow because everything is done with logarithms.
for p in (-50, -1, 0, 0.5, 1, 2, 50):
    print(f"T_{p}(1, 7) = {power_type_eval(PowerTypeSpec(MeanKind.T, p), 1, 7).value:.15g}")

# %%
# evaluate() takes arrays
x = np.logspace(-12, 0, 7)
print(evaluate(PowerTypeSpec(MeanKind.N), x, 1.0))
