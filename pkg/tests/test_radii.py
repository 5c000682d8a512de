import math

import pytest

from mlradii.domain import WiStatus
from mlradii.errors import DomainError, InvalidQuery
from mlradii.oracles import reference_root
from mlradii.radii import (
    OUTSIDE_WI_WARNING,
    Kind,
    Normalization,
    RadiusQuery,
    curvature,
    radius,
    solve_radius,
    star_quotient,
)
from mlradii.special import FunctionId, MLParams
from mlradii.zeros import find_zeros

P221 = MLParams(2, 2, 1)
GRID = [MLParams(3, 0.75, 1), MLParams(3, 1.8, 0.5), MLParams(3, 2.25, 2), MLParams(6, 0.75, 1)]
ALL = [(n, k) for n in Normalization for k in Kind]


def solve(p, n, k, rho=0.0, **kw):
    return solve_radius(RadiusQuery(p, n, k, rho), quiet_domain=True, **kw)


def test_star_quotient_examples():
    r = math.pi / 2 - 1e-9
    assert abs(star_quotient("G", P221, r)) < 1e-8
    for n in Normalization:
        assert star_quotient(n, P221, 1e-6) == pytest.approx(1.0, abs=1e-6)
    p = MLParams(3, 1.0, 0.7)
    for r in (0.3, 1.1, 2.0):
        assert star_quotient("F", p, r) == pytest.approx(star_quotient("G", p, r), rel=1e-14)


def test_curvature_examples():
    for r in (0.2, 0.7, 1.2):
        assert curvature("G", P221, r) == pytest.approx(1 - r * math.tan(r), rel=1e-12)
    # Psi = z sin z: 1 + Psi''/Psi' - Psi'/(2 Psi) at r = 1, about 0.3520
    s, c = math.sin(1.0), math.cos(1.0)
    expected = 1 + (2 * c - s) / (s + c) - 0.5 * (s + c) / s
    assert curvature("F", P221, 1.0) == pytest.approx(expected, rel=1e-12)
    assert expected == pytest.approx(0.3519, abs=2e-4)
    for n in Normalization:
        assert curvature(n, P221, 1e-6) == pytest.approx(1.0, abs=1e-5)


def test_quotients_reject_nonpositive_r():
    with pytest.raises(DomainError):
        star_quotient("G", P221, 0.0)
    with pytest.raises(DomainError):
        curvature("H", P221, -1.0)


@pytest.mark.parametrize("n, k, ref", [
    ("G", "starlike", math.pi / 2),
    ("F", "starlike", 2.028757838),
    ("H", "starlike", 2.028757838 ** 2),
    ("G", "convex", 0.860333589),
    ("H", "convex", reference_root("h_convex", 1) ** 2),
])
def test_oracle_radii(n, k, ref):
    assert solve(P221, n, k).value == pytest.approx(ref, abs=1e-8)


def test_result_fields_and_warning():
    r = radius(2, 2, 1, "G", "starlike")
    assert r.wi_status is WiStatus.Boundary
    assert r.warnings == (OUTSIDE_WI_WARNING,)
    lo, hi = r.bracket
    assert lo <= r.value <= hi
    assert r.iterations > 0
    assert solve(P221, "G", "starlike").warnings == ()
    assert r.denominator_zero == pytest.approx(math.pi, abs=1e-11)


def test_member_has_no_warning():
    r = solve_radius(RadiusQuery(GRID[0], "F", "convex"))
    assert r.wi_status is WiStatus.Member and r.warnings == ()


def test_query_validation():
    with pytest.raises(InvalidQuery):
        RadiusQuery(P221, "G", "starlike", 1.0)
    with pytest.raises(InvalidQuery):
        RadiusQuery(P221, "G", "starlike", -0.1)
    with pytest.raises(InvalidQuery):
        RadiusQuery(P221, "Q", "starlike")
    with pytest.raises(InvalidQuery):
        RadiusQuery(P221, "G", "spiral")


@pytest.mark.parametrize("p", GRID)
def test_monotone_in_rho(p):
    for n, k in ALL:
        values = [solve(p, n, k, rho).value for rho in (0, 0.25, 0.5, 0.75)]
        assert all(a > b for a, b in zip(values, values[1:]))


@pytest.mark.parametrize("p", GRID)
def test_convex_below_starlike(p):
    for n in Normalization:
        assert solve(p, n, "convex").value < solve(p, n, "starlike").value


@pytest.mark.parametrize("beta", [1.0])
@pytest.mark.parametrize("alpha, gamma", [(3, 1), (2.5, 0.6), (5, 2)])
def test_f_equals_g_at_beta_one(alpha, beta, gamma):
    p = MLParams(alpha, beta, gamma)
    for k in Kind:
        assert solve(p, "F", k).value == pytest.approx(solve(p, "G", k).value, abs=1e-10)


@pytest.mark.parametrize("p", GRID)
@pytest.mark.parametrize("rho", [0.5, 0.6, 0.75, 0.9])
def test_h_g_law(p, rho):
    h = solve(p, "H", "starlike", rho).value
    g = solve(p, "G", "starlike", 2 * rho - 1).value
    assert h == pytest.approx(g * g, abs=1e-9)


@pytest.mark.parametrize("p", GRID + [P221])
def test_order_zero_equals_zeros(p):
    xi = find_zeros(FunctionId.PsiPrime, p, 1)[0]
    zeta = find_zeros(FunctionId.Omega, p, 1)[0]
    eta = find_zeros(FunctionId.Sigma, p, 1)[0]
    assert solve(p, "F", "starlike").value == pytest.approx(xi, abs=1e-10 * max(1, xi))
    assert solve(p, "G", "starlike").value == pytest.approx(zeta, abs=1e-10 * max(1, zeta))
    assert solve(p, "H", "starlike").value == pytest.approx(eta, rel=1e-10)


@pytest.mark.parametrize("p", GRID[:2] + [P221])
def test_residual_bound(p):
    tol = 1e-12
    for n, k in ALL:
        r = solve(p, n, k, 0.3, tol=tol)
        f = star_quotient if Kind.parse(k) is Kind.Starlike else curvature
        h = 1e-6 * r.value
        slope = abs(f(n, p, r.value + h) - f(n, p, r.value - h)) / (2 * h)
        assert abs(f(n, p, r.value) - 0.3) <= 10 * tol * slope + 1e-14


def test_f_convex_decreasing_spot_check():
    # the bisection assumes a strictly decreasing curvature for f, also for beta < 1
    for p in (GRID[0], GRID[3], MLParams(2.5, 0.3, 1.5)):
        xi = find_zeros(FunctionId.PsiPrime, p, 1)[0]
        rs = [xi * t for t in (0.01, 0.2, 0.4, 0.6, 0.8, 0.95, 0.999)]
        qs = [curvature("F", p, r) for r in rs]
        assert all(a > b for a, b in zip(qs, qs[1:]))
