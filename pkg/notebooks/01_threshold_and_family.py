# %% [markdown]
# # Where the threshold sits and why the extremal family stays below it
#
# The spectral threshold is the A_alpha spectral radius of K1 v (K_{n-2} u K1).
# Below we compute it two ways, then sweep the family G1(n, s) over every
# admissible s and watch the radius fall away from the threshold once s >= 2.

# %%
from fractions import Fraction

import numpy as np

from aspectra import FamilySpec, extremal_g1, lambda_alpha, threshold_result
from aspectra.verify import case_scan

# %%
for alpha in (Fraction(0), Fraction(1, 3), Fraction(1, 2)):
    res = threshold_result(25, alpha)
    print(f"alpha={alpha}: root {res.value:.15f}  eigensolver {res.dense:.15f}  gap {res.agreement:.1e}")

# %% [markdown]
# The threshold grows with alpha but always stays between n - 2 and n - 1.

# %%
alphas = np.linspace(0, 0.65, 14)
values = [threshold_result(25, Fraction(a).limit_denominator(100)).value for a in alphas]
print(np.round(values, 6))
assert all(np.diff(values) > 0)

# %% [markdown]
# Now the family. s = 1 reproduces the threshold graph itself; larger s drops well below.

# %%
rep = case_scan(25, Fraction(1, 3))
for row in rep.rows:
    gap = rep.threshold - row.lambda_dense
    print(f"s={row.s:2d} case {row.case}  lambda={row.lambda_dense:.6f}  threshold - lambda = {gap:.3e}")
print("s=1 is the maximum:", rep.s1_is_maximum)

# %% [markdown]
# One graph directly, without the scan helper:

# %%
g = extremal_g1(FamilySpec(25, 3))
print(g.order, g.size(), lambda_alpha(g, Fraction(1, 2)))
