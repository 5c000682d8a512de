"""Evaluating the three-parameter Mittag-Leffler series.

For a handful of small integer parameters the series collapses to elementary
functions.  We use those to see how far the double-double summation can be
trusted on the real axis.
"""

# %%
import math

import numpy as np

from mlradii import FunctionId, MLParams, closed_form_phi, evaluate

# %% phi(2, 2, 1, z) = sinh(sqrt z)/sqrt z, so lambda(z) = phi(-z^2) = sin z / z
p = MLParams(2, 2, 1)
for z in (0.5, math.pi, 10.0, 30.0):
    r = evaluate(FunctionId.Lambda, p, z)
    print(f"z = {z:6.3f}  lambda = {r.value: .15e}  sin(z)/z = {math.sin(z) / z: .15e}"
          f"  terms = {r.terms_used:3d}  cancellation = {r.max_term_ratio:.1e}")

# %% Sweep all closed-form cases on [-25, 25]
worst = {}
for case in [(1, 1, 1), (2, 1, 1), (2, 2, 2), (2, 4, 1)]:
    q = MLParams(*case)
    errs = [abs(evaluate(FunctionId.Phi, q, z).value - closed_form_phi(case, z))
            / max(1.0, abs(closed_form_phi(case, z))) for z in np.linspace(-25, 25, 201)]
    worst[case] = max(errs)
for case, err in worst.items():
    print(f"{case}: worst scaled error {err:.2e}")

# %% Non-integer alpha goes through log-space coefficients instead
q = MLParams(2.5, 0.8, 1.3)
for z in (1.0, 5.0, 12.0):
    r = evaluate(FunctionId.Lambda, q, z)
    print(f"alpha = 2.5, z = {z:5.1f}: lambda = {r.value: .12e}  (noise estimate {r.error_estimate:.1e})")
