"""Elementary closed forms of phi(alpha, beta, gamma, z) for small integer
parameters, and bisection roots of the elementary equations they induce.

Nothing here touches the series engine; tests compare the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import InvalidQuery

CASES = ((1, 1, 1), (1, 1, 2), (2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2), (2, 3, 1), (2, 4, 1))


def _ch(z):
    """cosh(sqrt z), continued to z < 0 as cos(sqrt(-z))."""
    return math.cosh(math.sqrt(z)) if z >= 0 else math.cos(math.sqrt(-z))


def _shc(z):
    """sinh(sqrt z)/sqrt z, continued as sin(u)/u; equals 1 at 0."""
    if z == 0:
        return 1.0
    if z > 0:
        u = math.sqrt(z)
        return math.sinh(u) / u
    u = math.sqrt(-z)
    return math.sin(u) / u


def _cosh_m1_over_z(z):
    # (cosh sqrt z - 1)/z = 2 sinh^2(u/2)/u^2, stable near 0
    if z == 0:
        return 0.5
    if z > 0:
        u = math.sqrt(z)
        return 2.0 * math.sinh(0.5 * u) ** 2 / z
    u = math.sqrt(-z)
    return 2.0 * math.sin(0.5 * u) ** 2 / u ** 2


def _shc_m1_over_z(z):
    # (sinh(u)/u - 1)/z with u^2 = z; Taylor near 0
    if abs(z) < 1e-2:
        return 1 / 6 + z / 120 + z * z / 5040 + z ** 3 / 362880 + z ** 4 / 39916800
    return (_shc(z) - 1.0) / z


def closed_form_phi(case_id, z: float) -> float:
    case = tuple(int(v) for v in case_id)
    z = float(z)
    if case == (1, 1, 1):
        return math.exp(z)
    if case == (1, 1, 2):
        return math.exp(z) * (z + 1.0)
    if case == (2, 1, 1):
        return _ch(z)
    if case == (2, 1, 2):
        # cosh u + (u/2) sinh u,  u sinh u = z * sinh(u)/u
        return _ch(z) + 0.5 * z * _shc(z)
    if case == (2, 2, 1):
        return _shc(z)
    if case == (2, 2, 2):
        # (u sinh u + z cosh u)/(2z) = (sinh(u)/u + cosh u)/2
        return 0.5 * (_shc(z) + _ch(z))
    if case == (2, 3, 1):
        return _cosh_m1_over_z(z)
    if case == (2, 4, 1):
        return _shc_m1_over_z(z)
    raise InvalidQuery(f"no closed form for case {case_id!r}")


@dataclass(frozen=True)
class OracleCase:
    case_id: tuple
    closed_form: Callable[[float], float]

    def __call__(self, z: float) -> float:
        return self.closed_form(z)


def oracle_cases() -> tuple:
    return tuple(OracleCase(c, lambda z, c=c: closed_form_phi(c, z)) for c in CASES)


def _f_convex_221(x):
    # 1 + x Psi''/Psi' - (1/2) x Psi'/Psi with Psi = x sin x, times 2 sin x (sin x + x cos x)
    s, c = math.sin(x), math.cos(x)
    d1 = s + x * c
    d2 = 2 * c - x * s
    return 2 * s * d1 + 2 * x * s * d2 - d1 * d1


EQUATIONS = {
    "sin_zero": math.sin,
    "cos_zero": math.cos,
    "tan_eq_neg": lambda x: math.sin(x) + x * math.cos(x),
    "rtanr_eq_1": lambda x: x * math.sin(x) - math.cos(x),
    "h_convex": lambda u: (1 - u * u) * math.sin(u) + 3 * u * math.cos(u),
    "f_convex": _f_convex_221,
}

_SCAN_STEP = math.pi / 64


def reference_root(equation_id: str, n: int, tol: float = 1e-13) -> float:
    """n-th positive root of an elementary equation, by scan and bisection.

    ``sin_zero`` and ``cos_zero`` are returned in closed form.  ``f_convex`` is
    the cleared convexity equation of f for (alpha, beta, gamma) = (2, 2, 1);
    only its first root is a radius.
    """
    if equation_id not in EQUATIONS:
        raise InvalidQuery(f"unknown equation id {equation_id!r}")
    if isinstance(n, bool) or int(n) != n or n < 1:
        raise InvalidQuery(f"n must be a positive integer, got {n!r}")
    if equation_id == "sin_zero":
        return n * math.pi
    if equation_id == "cos_zero":
        return (2 * n - 1) * math.pi / 2
    f = EQUATIONS[equation_id]
    a = 1e-9
    fa = f(a)
    found = 0
    while True:
        b = a + _SCAN_STEP
        fb = f(b)
        if fb == 0.0 or (fa < 0) != (fb < 0):
            found += 1
            if found == n:
                break
        a, fa = b, fb
    if fb == 0.0:
        return b
    while b - a > tol:
        m = 0.5 * (a + b)
        if m in (a, b):
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)
