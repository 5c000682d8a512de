"""Radii of starlikeness and convexity of order rho.

At (alpha, beta, gamma) = (2, 2, 1) the normalization g is sin z, so we can
check the solver against elementary answers before moving to a grid point
without closed forms.
"""

# %%
import math

from mlradii import Kind, MLParams, Normalization, RadiusQuery, solve_radius

p = MLParams(2, 2, 1)
for n in Normalization:
    for kind in Kind:
        r = solve_radius(RadiusQuery(p, n, kind), quiet_domain=True)
        print(f"{kind.value:9s} {n.value.lower()}:  {r.value:.13f}  ({r.iterations} bisections)")
print("pi/2 =", math.pi / 2)

# %% Dependence on the order rho at a W_i point
q = MLParams(3, 1.8, 0.5)
print("rho    r*(f)     r*(g)     r*(h)    rc(f)     rc(g)     rc(h)")
for rho in (0.0, 0.25, 0.5, 0.75):
    row = [solve_radius(RadiusQuery(q, n, k, rho)).value for k in Kind for n in Normalization]
    print(f"{rho:4.2f} " + " ".join(f"{v:9.6f}" for v in row))

# %% h at order rho is the square of g at order 2 rho - 1
for rho in (0.5, 0.7):
    h = solve_radius(RadiusQuery(q, "H", "starlike", rho)).value
    g = solve_radius(RadiusQuery(q, "G", "starlike", 2 * rho - 1)).value
    print(f"rho = {rho}: h = {h:.12f}, g^2 = {g * g:.12f}")
