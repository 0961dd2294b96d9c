"""
Numerical evidence for N < T_p when p >= 4/5
=============================================

The second-order test gives 4/5 as the only candidate.  Below it the
inequality breaks near the diagonal.  At 4/5 a scan finds no failure and
the limit at x -> 0+ is still on the right side.
"""

from powermeans import SUPPORTED_PAIRS, conjecture_scan, endpoint_gap

for p in (0.7, 0.79, 0.8, 0.9, 2.0):
    scan = conjecture_scan(p)
    print(f"p = {p:<4}: {len(scan.violations):4d} violations, min gap {scan.min_gap:+.3e} "
          f"at x = {scan.link.argmin_x:.13g}")

# %%
pair = SUPPORTED_PAIRS["T-N"][0]
print("N(0+, 1) - T_{4/5}(0+, 1) =", endpoint_gap(pair, 0.8))
