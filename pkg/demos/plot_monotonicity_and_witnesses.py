"""
Monotonicity in p and the auxiliary functions
=============================================
"""

import numpy as np

from powermeans import (
    mixed_log_partial,
    n_lower_bound_check,
    verify_monotonicity_in_p,
    witness_f,
    z_log_derivative,
)

p_grid = np.linspace(-10, 10, 41)
for kind in ("P", "T", "N", "Z"):
    rep = verify_monotonicity_in_p(kind, p_grid, [(1, 2), (0.01, 30)])
    print(kind, "increasing in p:", rep.passed)

# %%
print("d/dp ln Z_p(1, e) at p = 1:", z_log_derivative(1, 1, np.e))
for kind in ("P", "T", "N"):
    print(f"(ln {kind})_xy at (2, 3) = {mixed_log_partial(kind, 2, 3):.6e}")
print("N - A^2/A_2 at (1, 2):", n_lower_bound_check(1, 2))

# %%
x = np.linspace(0.05, 0.95, 7)
for k in (1, 2, 3):
    print(f"f{k}:", np.array2string(witness_f(k, x), precision=3))
