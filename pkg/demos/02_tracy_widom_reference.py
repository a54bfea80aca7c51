"""Tracy-Widom(1) reference table: quantiles, round-trips, moments.

The null distribution of the test statistic is Tracy-Widom(1); this demo
shows the bundled table's key quantiles, verifies cdf/quantile
consistency, and prints the moments used by the bootstrap correction.
"""

import numpy as np

from sbmtest import tw1_cdf, tw1_moments, tw1_quantile

print("Tracy-Widom(1) quantiles:")
for p in (0.5, 0.9, 0.95, 0.975, 0.99):
    print(f"  F1^-1({p}) = {tw1_quantile(p):+.4f}")

print("\ncdf/quantile round-trip errors:")
worst = max(abs(tw1_cdf(tw1_quantile(p)) - p) for p in np.arange(0.01, 1.0, 0.01))
print(f"  max |F1(F1^-1(p)) - p| over p in (0.01..0.99): {worst:.2e}")

mu, sd = tw1_moments()
print(f"\nmoments: mean = {mu:.6f}, sd = {sd:.6f}")
print("(published values: -1.206533, 1.267982)")

print("\ntwo-sided rejection threshold at alpha = 0.05 "
      f"(upper 0.975 quantile): {tw1_quantile(0.975):.4f}")
