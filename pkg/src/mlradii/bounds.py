"""Rayleigh sums of reciprocal zeros and Euler-Rayleigh brackets.

For a zero-bearing series written as c_0 * prod (1 - w/w_n) in its natural
variable w (w = z^2 for the even series, w = z for Sigma and VarPi), the power
sums S_k = sum w_n^-k follow from the normalized coefficients
chat_j = c_j/c_0 by Newton's identities

    S_k = -k chat_k - sum_{j=1}^{k-1} chat_j S_{k-j}.

With positive zeros, S_k^(-1/k) < w_1 < S_k/S_{k+1} for every k >= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidQuery, Unsupported
from .radii import Kind, Normalization
from .special import ZERO_BEARING_IDS, FunctionId, MLParams, gamma_fn, series_coefficients

DEFAULT_K = 8


@dataclass(frozen=True)
class RayleighSums:
    id: FunctionId
    params: MLParams
    sums: tuple

    @property
    def K(self) -> int:
        return len(self.sums)

    def S(self, k: int) -> float:
        return self.sums[k - 1]


@dataclass(frozen=True)
class BoundsResult:
    lower: float
    upper: float
    k: int
    quantity: str

    def contains(self, value: float) -> bool:
        return self.lower < value < self.upper


def rayleigh_sums(fid, p: MLParams, K: int = DEFAULT_K) -> RayleighSums:
    fid = FunctionId.parse(fid)
    if fid not in ZERO_BEARING_IDS:
        raise InvalidQuery(f"{fid.value} is not one of the zero-bearing functions")
    if isinstance(K, bool) or int(K) != K or K < 1:
        raise InvalidQuery(f"K must be a positive integer, got {K!r}")
    K = int(K)
    coef = series_coefficients(fid, p, K + 1)
    chat = [c / coef[0] for c in coef]
    sums = []
    for k in range(1, K + 1):
        s = -k * chat[k]
        for j in range(1, k):
            s -= chat[j] * sums[k - j - 1]
        sums.append(s)
    return RayleighSums(fid, p, tuple(sums))


def euler_rayleigh_bracket(s: RayleighSums, k: int) -> tuple:
    """(S_k^(-1/k), S_k/S_{k+1}): a bracket for the first zero in the w variable."""
    if isinstance(k, bool) or int(k) != k or k < 1:
        raise InvalidQuery(f"k must be a positive integer, got {k!r}")
    if k + 1 > s.K:
        raise InvalidQuery(f"k = {k} needs S_{k + 1}, but only {s.K} sums are available")
    sk, sk1 = s.S(k), s.S(k + 1)
    return sk ** (-1.0 / k), sk / sk1


# closed forms of the first two Rayleigh sums, keyed by function id:
# S_1 = a * gamma Gamma(beta)/Gamma(alpha+beta),
# S_2 = S_1^2 - b * gamma (gamma+1) Gamma(beta)/Gamma(2 alpha+beta)
def _ab(fid: FunctionId, beta: float):
    return {
        FunctionId.PsiPrime: ((beta + 2.0) / beta, (beta + 4.0) / beta),
        FunctionId.Omega: (3.0, 5.0),
        FunctionId.Sigma: (2.0, 3.0),
        FunctionId.VarPhi: (9.0, 25.0),
        FunctionId.VarPi: (4.0, 9.0),
        FunctionId.Lambda: (1.0, 1.0),
    }[fid]


def closed_form_sums(fid, p: MLParams) -> tuple:
    """(S_1, S_2) from the explicit Gamma-function formulas."""
    fid = FunctionId.parse(fid)
    if fid not in ZERO_BEARING_IDS:
        raise InvalidQuery(f"{fid.value} is not one of the zero-bearing functions")
    a, b = _ab(fid, p.beta)
    g_b = gamma_fn(p.beta)
    s1 = a * p.gamma * g_b / gamma_fn(p.alpha + p.beta)
    s2 = s1 * s1 - b * p.gamma * (p.gamma + 1.0) * g_b / gamma_fn(2.0 * p.alpha + p.beta)
    return s1, s2


def starlike_bounds(n, p: MLParams) -> BoundsResult:
    """k = 1 bounds on (r*)^-2 for f and g and on (r*)^-1 for h."""
    n = Normalization.parse(n)
    al, be, ga = p.alpha, p.beta, p.gamma
    gb, gab, g2ab = gamma_fn(be), gamma_fn(al + be), gamma_fn(2 * al + be)
    if n is Normalization.F:
        upper = ga * (be + 2) * gb / (be * gab)
        lower = upper - (ga + 1) * (be + 4) * gab / ((be + 2) * g2ab)
        return BoundsResult(lower, upper, 1, "r*(f)^-2")
    if n is Normalization.G:
        upper = 3 * ga * gb / gab
        lower = upper - 5 * (ga + 1) * gab / (3 * g2ab)
        return BoundsResult(lower, upper, 1, "r*(g)^-2")
    upper = 2 * ga * gb / gab
    lower = upper - 3 * (ga + 1) * gab / (2 * g2ab)
    return BoundsResult(lower, upper, 1, "r*(h)^-1")


def convex_bounds(n, p: MLParams) -> BoundsResult:
    """k = 1 bounds on r^c(g)^-2 and r^c(h)^-1; none exist for f."""
    n = Normalization.parse(n)
    if n is Normalization.F:
        raise Unsupported("unsupported: no convexity bounds are available for f")
    al, be, ga = p.alpha, p.beta, p.gamma
    gb, gab, g2ab = gamma_fn(be), gamma_fn(al + be), gamma_fn(2 * al + be)
    if n is Normalization.G:
        upper = 9 * ga * gb / gab
        lower = upper - 25 * (ga + 1) * gab / (9 * g2ab)
        return BoundsResult(lower, upper, 1, "r^c(g)^-2")
    upper = 4 * ga * gb / gab
    lower = upper - 9 * (ga + 1) * gab / (4 * g2ab)
    return BoundsResult(lower, upper, 1, "r^c(h)^-1")


# radius at order zero = first zero of this series (natural variable)
RADIUS_SERIES = {
    (Normalization.F, Kind.Starlike): FunctionId.PsiPrime,
    (Normalization.G, Kind.Starlike): FunctionId.Omega,
    (Normalization.H, Kind.Starlike): FunctionId.Sigma,
    (Normalization.G, Kind.Convex): FunctionId.VarPhi,
    (Normalization.H, Kind.Convex): FunctionId.VarPi,
}


def radius_bounds(n, kind, p: MLParams, k: int = 1) -> BoundsResult:
    """Order-k Euler-Rayleigh bounds on the order-zero radius.

    The bracket is on r^-2 for f and g and on r^-1 for h, as in
    ``starlike_bounds``/``convex_bounds``, which the k = 1 case reproduces.
    """
    n, kind = Normalization.parse(n), Kind.parse(kind)
    if (n, kind) not in RADIUS_SERIES:
        raise Unsupported("unsupported: no convexity bounds are available for f")
    fid = RADIUS_SERIES[(n, kind)]
    lo_w, hi_w = euler_rayleigh_bracket(rayleigh_sums(fid, p, k + 1), k)
    r = "r*" if kind is Kind.Starlike else "r^c"
    power = "-1" if n is Normalization.H else "-2"
    return BoundsResult(1.0 / hi_w, 1.0 / lo_w, k, f"{r}({n.value.lower()})^{power}")


def bounds(n, kind, p: MLParams, k: int = 1) -> BoundsResult:
    """Closed-form bounds for k = 1, Newton-identity bounds for k >= 2."""
    kind = Kind.parse(kind)
    if k == 1:
        return starlike_bounds(n, p) if kind is Kind.Starlike else convex_bounds(n, p)
    return radius_bounds(n, kind, p, k)


def partial_reciprocal_sum(zeros, even: bool) -> float:
    """sum w_n^-1 over found zeros (w = z^2 for even series)."""
    return math.fsum((1.0 / (z * z) if even else 1.0 / z) for z in zeros)
