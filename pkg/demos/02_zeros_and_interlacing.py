"""Positive zeros of lambda and of the derivative series.

The zeros of lambda and of Psi' (Psi = z^beta lambda) alternate.  The
scan step comes from the first Rayleigh sum, so no zero can be skipped.
"""

# %%
from mlradii import FunctionId, MLParams, check_interlacing, find_zeros

p = MLParams(3, 0.75, 1)
lam = find_zeros(FunctionId.Lambda, p, 8)
xi = find_zeros(FunctionId.PsiPrime, p, 8)

# %%
print(" n      xi_n             lambda_n")
for n, (a, b) in enumerate(zip(xi, lam), start=1):
    print(f"{n:2d}  {a:16.10f}  {b:16.10f}")
print("interlaced:", check_interlacing(lam, xi))

# %% Larger alpha spreads the zeros out quickly
p6 = MLParams(6, 0.75, 1)
print([f"{z:.6g}" for z in find_zeros(FunctionId.Lambda, p6, 6)])
