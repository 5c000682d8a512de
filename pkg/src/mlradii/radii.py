"""Radii of starlikeness and convexity of order rho for the normalizations

    f(z) = (z^beta Gamma(beta) lambda(z))^(1/beta)
    g(z) = z Gamma(beta) lambda(z)
    h(z) = z Gamma(beta) lambda(sqrt z)

with lambda(z) = phi(alpha, beta, gamma, -z^2).  Each radius is the unique root
in (0, D) of a quotient that decreases strictly from 1 to -infinity, so plain
bisection on (quotient - rho) finds it.  All quotients are written through
log-derivatives of the reduced series; the fractional power in f is never
formed.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from .domain import DEFAULT_EPS_DOM, WiStatus, wi_status_for
from .errors import DomainError, InvalidQuery
from .special import DEFAULT_SERIES_TOL, FunctionId, MLParams, reduced_derivative, reduced_value
from .zeros import DEFAULT_ROOT_TOL, find_zeros

OUTSIDE_WI_WARNING = "zero-reality not guaranteed: (1/alpha, beta) is not a W_i member"


class Normalization(str, enum.Enum):
    F = "F"
    G = "G"
    H = "H"

    @classmethod
    def parse(cls, v) -> "Normalization":
        if isinstance(v, cls):
            return v
        try:
            return cls(str(v).upper())
        except ValueError:
            raise InvalidQuery(f"unknown normalization {v!r}") from None


class Kind(str, enum.Enum):
    Starlike = "starlike"
    Convex = "convex"

    @classmethod
    def parse(cls, v) -> "Kind":
        if isinstance(v, cls):
            return v
        try:
            return cls(str(v).lower())
        except ValueError:
            raise InvalidQuery(f"unknown kind {v!r}") from None


@dataclass(frozen=True)
class RadiusQuery:
    params: MLParams
    normalization: Normalization
    kind: Kind
    rho: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "normalization", Normalization.parse(self.normalization))
        object.__setattr__(self, "kind", Kind.parse(self.kind))
        rho = float(self.rho)
        if not (0.0 <= rho < 1.0):
            raise InvalidQuery(f"rho must lie in [0, 1), got {self.rho!r}")
        object.__setattr__(self, "rho", rho)


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket: tuple
    residual: float
    iterations: int
    wi_status: WiStatus
    warnings: tuple = field(default=())
    denominator_zero: float = math.nan


def _log_derivative(fid, p, r, tol):
    """r * s'(r) / s(r) for a reduced series s."""
    return r * reduced_derivative(fid, p, r, tol).value / reduced_value(fid, p, r, tol).value


def star_quotient(n, p: MLParams, r: float, tol: float = DEFAULT_SERIES_TOL) -> float:
    """r f'(r)/f(r) (or the same for g, h) on the real axis."""
    n = Normalization.parse(n)
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    if n is Normalization.H:
        u = math.sqrt(r)
        return 1.0 + 0.5 * _log_derivative(FunctionId.Lambda, p, u, tol)
    q = _log_derivative(FunctionId.Lambda, p, r, tol)
    return 1.0 + (q / p.beta if n is Normalization.F else q)


def curvature(n, p: MLParams, r: float, tol: float = DEFAULT_SERIES_TOL) -> float:
    """1 + r f''(r)/f'(r) (or the same for g, h) on the real axis."""
    n = Normalization.parse(n)
    if not r > 0.0:
        raise DomainError(f"r must be positive, got {r!r}")
    if n is Normalization.G:
        return 1.0 + _log_derivative(FunctionId.Omega, p, r, tol)
    if n is Normalization.H:
        return 1.0 + _log_derivative(FunctionId.Sigma, p, r, tol)
    # Psi' = z^(beta-1) P(z):  r Psi''/Psi' = beta - 1 + r P'/P,  r Psi'/Psi = beta + r lambda'/lambda
    dp = _log_derivative(FunctionId.PsiPrime, p, r, tol)
    dl = _log_derivative(FunctionId.Lambda, p, r, tol)
    return 1.0 + dp + (1.0 / p.beta - 1.0) * dl


# (normalization, kind) -> series whose first positive zero bounds the bracket
_DENOMINATOR = {
    (Normalization.F, Kind.Starlike): FunctionId.Lambda,
    (Normalization.G, Kind.Starlike): FunctionId.Lambda,
    (Normalization.H, Kind.Starlike): FunctionId.Lambda,  # solved in u = sqrt(r)
    (Normalization.F, Kind.Convex): FunctionId.PsiPrime,
    (Normalization.G, Kind.Convex): FunctionId.Omega,
    (Normalization.H, Kind.Convex): FunctionId.Sigma,
}


def bracket_end(n, kind, p: MLParams, root_tol: float = DEFAULT_ROOT_TOL) -> float:
    """Upper end D of the solving bracket (0, D), in the variable r."""
    n, kind = Normalization.parse(n), Kind.parse(kind)
    d = find_zeros(_DENOMINATOR[(n, kind)], p, 1, root_tol)[0]
    if n is Normalization.H and kind is Kind.Starlike:
        return d * d
    return d


def solve_radius(q: RadiusQuery, tol: float = DEFAULT_ROOT_TOL,
                 series_tol: float = DEFAULT_SERIES_TOL, eps_dom: float = DEFAULT_EPS_DOM,
                 quiet_domain: bool = False) -> RadiusResult:
    """Smallest positive root of quotient(r) = rho for the query.

    Parameters outside W_i are solved anyway; the result then carries a
    warning unless ``quiet_domain`` is set.
    """
    if not isinstance(q, RadiusQuery):
        raise InvalidQuery("solve_radius expects a RadiusQuery")
    if not tol > 0.0:
        raise InvalidQuery("tol must be positive")
    p, n, kind, rho = q.params, q.normalization, q.kind, q.rho
    verdict = wi_status_for(p.alpha, p.beta, eps_dom)
    warnings = []
    if verdict.status is not WiStatus.Member and not quiet_domain:
        warnings.append(OUTSIDE_WI_WARNING)

    d = find_zeros(_DENOMINATOR[(n, kind)], p, 1, min(tol, DEFAULT_ROOT_TOL), series_tol)[0]
    in_u = n is Normalization.H and kind is Kind.Starlike
    if in_u:
        def g(u):
            return 1.0 + 0.5 * _log_derivative(FunctionId.Lambda, p, u, series_tol) - rho
        width = tol / (2.0 * d)
    else:
        quotient = star_quotient if kind is Kind.Starlike else curvature

        def g(r):
            return quotient(n, p, r, series_tol) - rho
        width = tol

    lo, hi = 0.0, d
    iterations = 0
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        gm = g(mid)
        iterations += 1
        if gm > 0.0:
            lo = mid
        elif gm < 0.0:
            hi = mid
        else:
            lo = hi = mid
            break
    root = 0.5 * (lo + hi)
    residual = abs(g(root))
    if in_u:
        return RadiusResult(root * root, (lo * lo, hi * hi), residual, iterations,
                            verdict.status, tuple(warnings), d * d)
    return RadiusResult(root, (lo, hi), residual, iterations, verdict.status, tuple(warnings), d)


def radius(alpha, beta, gamma, normalization, kind, rho=0.0, **kw) -> RadiusResult:
    """Convenience wrapper building the query from raw parameters."""
    q = RadiusQuery(MLParams(alpha, beta, gamma), normalization, kind, rho)
    return solve_radius(q, **kw)
