"""
Taylor series at the diagonal
=============================

Jets are truncated power series.  Feeding the jet ``1 + t`` through a
mean's formula gives the series of M(1 + t, 1), with the removable
singularities cancelled exactly.
"""

from powermeans import Jet, MeanKind, PowerTypeSpec, mean_series, power_type_series
from powermeans.jets import log

t = Jet.variable(5)
# t vanishes at 0 on both sides, so one order is lost
print("t / log(1 + t) =", (t / log(1 + t)).coeffs)

# %%
for kind in MeanKind:
    c = mean_series(kind, 4).coeffs
    print(f"{kind.value:>2}: " + "  ".join(f"{v:+.6f}" for v in c))

# %%
# The (x - 1)**2 coefficient of M_p is affine in p: p (c2 + 1/8) - 1/8.
for p in (0.5, 1.0, 2.0):
    c2 = power_type_series(PowerTypeSpec(MeanKind.L, p), 2)[2]
    print(f"c2(L_{p}) = {c2:+.12f}")
