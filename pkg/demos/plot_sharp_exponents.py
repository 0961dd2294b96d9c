"""
Sharp exponents
===============

For a comparison such as L_p < P, both sides agree to first order at
x = 1.  The sign of the second-order coefficient decides whether the
inequality can survive near the diagonal, so its root is the only
possible sharp exponent.
"""

from powermeans import SUPPORTED_PAIRS, critical_exponent, restate_by_rescaling, sharpness_witness

for name, (pair, status) in SUPPORTED_PAIRS.items():
    rep = critical_exponent(pair)
    print(rep.verdict(status))

# %%
# Just past p* the scan finds points where the inequality fails; just
# inside it finds none.
pair = SUPPORTED_PAIRS["Z-Y"][0]
failing, passing = sharpness_witness(pair)
print(f"p = {failing.p:.4f}: {len(failing.violations)} violations, "
      f"worst gap {failing.min_gap:.2e} at x = {failing.link.argmin_x:.8f}")
print(f"p = {passing.p:.4f}: {len(passing.violations)} violations")

# %%
# Moving the order to the other side by substituting a -> a**(1/p).
restated = restate_by_rescaling(SUPPORTED_PAIRS["P-N"][0])
print(restated.statement(), "critical order", critical_exponent(restated).p_star)
