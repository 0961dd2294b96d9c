"""
Checking inequality chains
==========================

A chain is a list of power-type means that should be strictly increasing
at every (x, 1) with x != 1.
"""

from powermeans import BUILTIN_CHAINS, ChainSpec, verify_chain

for name, spec in BUILTIN_CHAINS.items():
    rep = verify_chain(spec)
    print(f"{name:>14}: {'pass' if rep.passed else 'FAIL'}  {spec}")
    for link in rep.links:
        print(f"{'':>16}{link.name:<24} min gap {link.min_gap:.2e} at x = {link.argmin_x:.7g}")

# %%
# A reversed link fails at every grid point
bad = verify_chain(ChainSpec.parse("reversed", "A < G"))
print(len(bad.violations), "violations, first:", bad.violations[0])
