"""Euler-Rayleigh bounds for the radii of order zero.

The closed-form k = 1 bounds use only Gamma values.  Newton's identities turn
the series coefficients into power sums of reciprocal zeros, which give
sharper brackets as k grows.
"""

# %%
from mlradii import MLParams, RadiusQuery, bounds, solve_radius

p = MLParams(3, 0.75, 1)
cases = [("F", "starlike"), ("G", "starlike"), ("H", "starlike"), ("G", "convex"), ("H", "convex")]

# %%
for n, kind in cases:
    r = solve_radius(RadiusQuery(p, n, kind)).value
    m = r ** (-1 if n == "H" else -2)
    print(f"{kind} {n.lower()}: measured {m:.10f}")
    for k in (1, 2, 4):
        b = bounds(n, kind, p, k)
        print(f"   k={k}: ({b.lower:.10f}, {b.upper:.10f})  width {b.upper - b.lower:.2e}")
