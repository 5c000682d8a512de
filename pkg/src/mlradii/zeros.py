"""Positive zeros of the six zero-bearing series, found by sign-change scan and
bisection, plus interlacing and product-reconstruction checks."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .errors import InvalidQuery, MaxScanExceeded, PrecisionLoss, UnresolvedBracket
from .special import (
    DEFAULT_SERIES_TOL,
    EVEN_IDS,
    ZERO_BEARING_IDS,
    FunctionId,
    MLParams,
    ln_gamma,
    reduced_value,
)

DEFAULT_ROOT_TOL = 1e-12
FLAT_RATIO = 1e-13
NOISE_RATIO = 1e-6
MAX_SCAN = 1e9
MAX_STEPS = 1_000_000


@dataclass(frozen=True)
class ZeroSequence:
    params: MLParams
    id: FunctionId
    zeros: tuple
    tol: float
    brackets: tuple = ()

    def __len__(self):
        return len(self.zeros)

    def __getitem__(self, i):
        return self.zeros[i]

    def __iter__(self):
        return iter(self.zeros)


def _lower_bound_first_zero(fid: FunctionId, p: MLParams) -> float:
    from .bounds import rayleigh_sums

    s1 = rayleigh_sums(fid, p, 1).sums[0]
    return 1.0 / math.sqrt(s1) if fid in EVEN_IDS else 1.0 / s1


def _bisect(f, a, fa, b, fb, tol):
    """Shrink a sign-change bracket to width tol (or to adjacent floats)."""
    steps = 0
    while True:
        width_floor = 4.0 * math.ulp(max(abs(a), abs(b)))
        if b - a <= max(tol, width_floor):
            break
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        fm = f(m)
        steps += 1
        if fm == 0.0:
            return m, m, steps
        if (fm < 0.0) == (fa < 0.0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return a, b, steps


def find_zeros(fid, p: MLParams, count: int, tol: float = DEFAULT_ROOT_TOL,
               series_tol: float = DEFAULT_SERIES_TOL, max_scan: float = MAX_SCAN) -> ZeroSequence:
    """First ``count`` positive zeros of a zero-bearing series.

    The scan starts with a step of a quarter of the Euler-Rayleigh lower bound
    on the first zero, then uses a quarter of the last observed gap.
    """
    fid = FunctionId.parse(fid)
    if fid not in ZERO_BEARING_IDS:
        raise InvalidQuery(f"{fid.value} is not one of the zero-bearing functions")
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise InvalidQuery(f"count must be a positive integer, got {count!r}")
    if not tol > 0.0:
        raise InvalidQuery("tol must be positive")

    def f(z):
        return reduced_value(fid, p, z, series_tol).value

    step = 0.25 * _lower_bound_first_zero(fid, p)
    zeros, brackets = [], []
    a = 0.0
    fa = f(0.0)
    recent = deque([abs(fa)], maxlen=8)
    flat_run = 0
    steps = 0
    last_zero = 0.0
    while len(zeros) < count:
        b = a + step
        if b > max_scan or steps > MAX_STEPS:
            raise MaxScanExceeded(
                f"{fid.value}: found {len(zeros)} of {count} zeros before z = {a:.6g}"
            )
        res = reduced_value(fid, p, b, series_tol)
        fb = res.value
        steps += 1
        amplitude = max(recent)
        if res.error_estimate > NOISE_RATIO * max(amplitude, abs(fb)):
            raise PrecisionLoss(
                f"{fid.value}: cancellation noise {res.error_estimate:.3g} near z = {b:.6g} "
                f"swamps the local amplitude {amplitude:.3g}"
            )
        if fb == 0.0 or (fa < 0.0) != (fb < 0.0):
            if fb == 0.0:
                lo = hi = b
            else:
                lo, hi, _ = _bisect(f, a, fa, b, fb, tol)
            z0 = 0.5 * (lo + hi)
            zeros.append(z0)
            brackets.append((lo, hi))
            step = 0.25 * (z0 - last_zero)
            last_zero = z0
            flat_run = 0
            if fb == 0.0:
                # step off the exact zero so the next sign comparison is meaningful
                b = b + 0.5 * step
                fb = f(b)
        else:
            if abs(fb) < FLAT_RATIO * amplitude:
                flat_run += 1
                if flat_run >= 3:
                    raise UnresolvedBracket(
                        f"{fid.value}: |f| stays below {FLAT_RATIO:g} x local max near z = {b:.6g} "
                        "without a sign change (possible double zero)"
                    )
            else:
                flat_run = 0
        recent.append(abs(fb))
        a, fa = b, fb
    return ZeroSequence(p, fid, tuple(zeros), tol, tuple(brackets))


def check_interlacing(a, b, margin: float | None = None) -> bool:
    """True iff b1 < a1 < b2 < a2 < ... over the common prefix.

    ``margin`` defaults to the larger tolerance of the two sequences (zero for
    plain lists).
    """
    za, zb = list(a), list(b)
    if margin is None:
        margin = max(getattr(a, "tol", 0.0), getattr(b, "tol", 0.0))
    m = min(len(za), len(zb))
    if m < 1:
        return False
    for i in range(m):
        if not zb[i] + margin < za[i]:
            return False
        if i + 1 < m and not za[i] + margin < zb[i + 1]:
            return False
    return True


def weierstrass_product(zeros, z: float, beta: float) -> float:
    """Truncated product prod (1 - z^2/l_n^2) / Gamma(beta) over the given zeros."""
    log_mag = 0.0
    sign = 1.0
    z2 = z * z
    for lam in zeros:
        factor = 1.0 - z2 / (lam * lam)
        if factor == 0.0:
            return 0.0
        if factor < 0.0:
            sign = -sign
        log_mag += math.log(abs(factor))
    return sign * math.exp(log_mag - ln_gamma(beta))
