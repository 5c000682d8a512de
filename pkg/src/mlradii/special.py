"""Prabhakar (three-parameter Mittag-Leffler) series and the entire functions
derived from it.

Every function handled here is a power series built on the coefficients

    c_n = (gamma)_n / (n! * Gamma(alpha*n + beta)),

evaluated on the real axis.  ``FunctionId`` names the nine series:

========== ==================================================== ==========
tag        series                                               variable
========== ==================================================== ==========
Phi        sum c_n z^n                                          z
Lambda     sum (-1)^n c_n z^(2n)                  = phi(-z^2)   z^2
Psi        z^beta * Lambda                                      z^2
PsiPrime   sum (-1)^n c_n (2n+beta) z^(2n+beta-1)               z^2
PsiSecond  sum (-1)^n c_n (2n+beta)(2n+beta-1) z^(2n+beta-2)    z^2
Omega      sum (-1)^n c_n (2n+1) z^(2n)           = (z Lambda)' z^2
Sigma      sum (-1)^n c_n (n+1) z^n                             z
VarPhi     Gamma(beta) sum (-1)^n c_n (2n+1)^2 z^(2n)           z^2
VarPi      Gamma(beta) sum (-1)^n c_n (n+1)^2 z^n               z
========== ==================================================== ==========

The Psi family carries a fractional prefactor ``z**shift``; the *reduced*
series drops it (same positive zeros, no branch issues).
"""

from __future__ import annotations

import enum
import math
import os
import threading
from dataclasses import dataclass
from functools import lru_cache

from scipy import special as _sp

from . import _dd
from .errors import CoefficientOverflow, DomainError, InvalidQuery, NonConvergence

DBL_EPS = 2.220446049250313e-16
DEFAULT_SERIES_TOL = 1e-14
DEFAULT_MAX_TERMS = 10_000
CANCELLATION_FLAG = 1e12
_LOG_MAX = 709.78


def max_terms() -> int:
    """Series term cap; ``ML_RADII_MAX_TERMS`` overrides the default."""
    raw = os.environ.get("ML_RADII_MAX_TERMS")
    if raw is None:
        return DEFAULT_MAX_TERMS
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidQuery(f"ML_RADII_MAX_TERMS must be an integer, got {raw!r}") from None
    if cap < 1:
        raise InvalidQuery("ML_RADII_MAX_TERMS must be positive")
    return cap


@dataclass(frozen=True)
class MLParams:
    """Parameter triple of the Prabhakar function."""

    alpha: float
    beta: float
    gamma: float

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise DomainError(f"{name} must be a real number, got {v!r}")
            v = float(v)
            if not math.isfinite(v) or v <= 0.0:
                raise DomainError(f"{name} must be positive and finite, got {v!r}")
            object.__setattr__(self, name, v)

    @property
    def x(self) -> float:
        """Abscissa 1/alpha of the parameter plane."""
        return 1.0 / self.alpha

    @property
    def integer_alpha(self) -> bool:
        return self.alpha == int(self.alpha) and self.alpha <= 64


class FunctionId(str, enum.Enum):
    Phi = "Phi"
    Lambda = "Lambda"
    Psi = "Psi"
    PsiPrime = "PsiPrime"
    PsiSecond = "PsiSecond"
    Omega = "Omega"
    Sigma = "Sigma"
    VarPhi = "VarPhi"
    VarPi = "VarPi"

    @classmethod
    def parse(cls, name) -> "FunctionId":
        if isinstance(name, cls):
            return name
        for member in cls:
            if member.value.lower() == str(name).lower():
                return member
        raise InvalidQuery(f"unknown function id {name!r}")


EVEN_IDS = frozenset(
    {FunctionId.Lambda, FunctionId.Psi, FunctionId.PsiPrime, FunctionId.PsiSecond,
     FunctionId.Omega, FunctionId.VarPhi}
)
ZERO_BEARING_IDS = frozenset(
    {FunctionId.Lambda, FunctionId.PsiPrime, FunctionId.Omega, FunctionId.Sigma,
     FunctionId.VarPhi, FunctionId.VarPi}
)
_PSI_FAMILY = frozenset({FunctionId.Psi, FunctionId.PsiPrime, FunctionId.PsiSecond})


@dataclass(frozen=True)
class EvalResult:
    """Outcome of a series evaluation.

    ``value + value_lo`` is the sum carried to extra precision; ``value`` alone
    is the correctly rounded double.  ``error_estimate`` is a rough absolute
    bound on the rounding noise, dominated by cancellation when
    ``max_term_ratio`` is large.
    """

    value: float
    terms_used: int
    max_term_ratio: float
    abs_sum: float = 0.0
    error_estimate: float = 0.0
    value_lo: float = 0.0

    @property
    def flagged(self) -> bool:
        return self.max_term_ratio > CANCELLATION_FLAG


# ---------------------------------------------------------------------------
# Gamma machinery

_EULER_GAMMA = 0.57721566490153286061
_NEAR_ROOT = 0.25
_N_ZETA = 36
# ln Gamma(1+e) = -g e + sum_{k>=2} (-1)^k zeta(k)/k e^k
_LG1_COEF = [-_EULER_GAMMA] + [(-1) ** k * float(_sp.zeta(k)) / k for k in range(2, _N_ZETA)]
# ln Gamma(2+e) = (1-g) e + sum_{k>=2} (-1)^k (zeta(k)-1)/k e^k
_LG2_COEF = [1.0 - _EULER_GAMMA] + [(-1) ** k * float(_sp.zetac(k)) / k for k in range(2, _N_ZETA)]


def _horner_times_e(coef, e):
    acc = 0.0
    for c in reversed(coef):
        acc = acc * e + c
    return acc * e


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for real x > 0.

    Near the roots x = 1 and x = 2 a Taylor expansion in zeta values keeps the
    relative error small; elsewhere ``scipy.special.gammaln`` is used.
    """
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"ln_gamma requires finite x > 0, got {x!r}")
    e = x - 1.0
    if abs(e) < _NEAR_ROOT:
        return _horner_times_e(_LG1_COEF, e)
    e = x - 2.0
    if abs(e) < _NEAR_ROOT:
        return _horner_times_e(_LG2_COEF, e)
    return float(_sp.gammaln(x))


def gamma_fn(x: float) -> float:
    """Gamma(x) for x > 0 via ``ln_gamma``."""
    lg = ln_gamma(x)
    if lg > _LOG_MAX:
        raise CoefficientOverflow(f"Gamma({x}) overflows")
    return math.exp(lg)


def pochhammer(a: float, n: int) -> float:
    """Rising factorial (a)_n: a direct product for n <= 64, else the Gamma
    ratio as computed by ``scipy.special.poch``."""
    a = float(a)
    if not math.isfinite(a) or a <= 0.0:
        raise DomainError(f"pochhammer requires a > 0, got {a!r}")
    if isinstance(n, bool) or int(n) != n or n < 0:
        raise DomainError(f"pochhammer requires a nonnegative integer n, got {n!r}")
    n = int(n)
    if n <= 64:
        prod = 1.0
        for k in range(n):
            prod *= a + k
        if not math.isfinite(prod):
            raise CoefficientOverflow(f"({a})_{n} overflows")
        return prod
    value = float(_sp.poch(a, n))
    if not math.isfinite(value):
        raise CoefficientOverflow(f"({a})_{n} overflows")
    return value


def _ln_poch(a: float, n: int) -> float:
    if n == 0:
        return 0.0
    if n <= 64:
        return math.fsum(math.log(a + k) for k in range(n))
    return ln_gamma(a + n) - ln_gamma(a)


def _log_c(p: MLParams, n: int) -> float:
    return _ln_poch(p.gamma, n) - ln_gamma(n + 1.0) - ln_gamma(p.alpha * n + p.beta)


def _multiplier(fid: FunctionId, beta: float, n: int) -> float:
    if fid in (FunctionId.Phi, FunctionId.Lambda, FunctionId.Psi):
        return 1.0
    if fid is FunctionId.PsiPrime:
        return 2 * n + beta
    if fid is FunctionId.PsiSecond:
        return (2 * n + beta) * (2 * n + beta - 1)
    if fid is FunctionId.Omega:
        return 2 * n + 1.0
    if fid is FunctionId.Sigma:
        return n + 1.0
    if fid is FunctionId.VarPhi:
        return (2 * n + 1.0) ** 2
    return (n + 1.0) ** 2  # VarPi


def _multiplier_dd(fid: FunctionId, beta: float, n: int):
    if fid in (FunctionId.Phi, FunctionId.Lambda, FunctionId.Psi):
        return (1.0, 0.0)
    if fid is FunctionId.PsiPrime:
        return _dd.two_sum(2.0 * n, beta)
    if fid is FunctionId.PsiSecond:
        return _dd.mul(_dd.two_sum(2.0 * n, beta), _dd.two_sum(2.0 * n - 1.0, beta))
    if fid is FunctionId.Omega:
        return (2.0 * n + 1.0, 0.0)
    if fid is FunctionId.Sigma:
        return (n + 1.0, 0.0)
    if fid is FunctionId.VarPhi:
        return ((2.0 * n + 1.0) ** 2, 0.0)
    return ((n + 1.0) ** 2, 0.0)


def series_coefficients(fid, p: MLParams, count: int) -> list:
    """Signed coefficients of a series in its natural variable.

    Even series (Lambda, Omega, VarPhi and the Psi family) are reported per
    power of z^2; for the Psi family the n-th entry multiplies
    ``z**(2n + shift)``.  Coefficients are formed in log space.
    """
    fid = FunctionId.parse(fid)
    if isinstance(count, bool) or int(count) != count or count < 1:
        raise InvalidQuery(f"count must be a positive integer, got {count!r}")
    extra = ln_gamma(p.beta) if fid in (FunctionId.VarPhi, FunctionId.VarPi) else 0.0
    out = []
    for n in range(int(count)):
        m = _multiplier(fid, p.beta, n)
        if m == 0.0:
            out.append(0.0)
            continue
        lg = _log_c(p, n) + math.log(abs(m)) + extra
        if lg > _LOG_MAX:
            raise CoefficientOverflow(f"coefficient {n} of {fid.value} overflows")
        sign = 1.0 if m > 0 else -1.0
        if fid is not FunctionId.Phi and n % 2:
            sign = -sign
        out.append(sign * math.exp(lg))
    return out


# ---------------------------------------------------------------------------
# Coefficient tables (memoized, grown on demand)


class _CoefTable:
    """Coefficients a_n = (c_n / c_0) * m_n of one reduced series.

    For integer alpha the ratio c_{n+1}/c_n is rational in the parameters and
    is carried in double-double; otherwise log magnitudes are stored.
    """

    def __init__(self, fid: FunctionId, p: MLParams):
        self.fid = fid
        self.p = p
        self.exact = p.integer_alpha
        self._lock = threading.Lock()
        self._ratio = [(1.0, 0.0)]  # c_n / c_0 in double-double
        self._step = [(1.0, 0.0)]  # c_n / c_{n-1}
        self._mult = []
        self._dd = []
        self._log = []
        self._sign = []

    def _grow(self, n):
        p = self.p
        a = int(p.alpha)
        while len(self._ratio) <= n:
            k = len(self._ratio) - 1
            num = _dd.two_sum(p.gamma, float(k))
            den = (k + 1.0, 0.0)
            base = a * float(k)
            for j in range(a):
                den = _dd.mul(den, _dd.add_float(_dd.two_sum(p.beta, float(j)), base))
            step = _dd.div(num, den)
            self._step.append(step)
            self._ratio.append(_dd.mul(self._ratio[-1], step))

    def dd(self, n):
        if n < len(self._dd):
            return self._dd[n]
        with self._lock:
            while len(self._dd) <= n:
                k = len(self._dd)
                self._grow(k)
                m = _multiplier_dd(self.fid, self.p.beta, k)
                self._mult.append(m)
                self._dd.append(_dd.mul(self._ratio[k], m))
            return self._dd[n]

    def step_mult(self, n):
        """(c_n/c_{n-1}, m_n) in double-double, for running-product summation."""
        if n >= len(self._dd):
            self.dd(n)
        return self._step[n], self._mult[n]

    def coef(self, n):
        if self.exact:
            return self.dd(n)[0]
        la, sa = self.log_signed(n)
        return sa * math.exp(la) if sa else 0.0

    def log_signed(self, n):
        if n < len(self._log):
            return self._log[n], self._sign[n]
        with self._lock:
            lc0 = _log_c(self.p, 0)
            while len(self._log) <= n:
                k = len(self._log)
                m = _multiplier(self.fid, self.p.beta, k)
                if m == 0.0:
                    self._log.append(-math.inf)
                    self._sign.append(0.0)
                else:
                    self._log.append(_log_c(self.p, k) - lc0 + math.log(abs(m)))
                    self._sign.append(1.0 if m > 0 else -1.0)
            return self._log[n], self._sign[n]


@lru_cache(maxsize=512)
def _table(fid: FunctionId, p: MLParams) -> _CoefTable:
    return _CoefTable(fid, p)


def _common_factor(fid: FunctionId, p: MLParams) -> float:
    # c_0 = 1/Gamma(beta); VarPhi and VarPi carry an extra Gamma(beta)
    if fid in (FunctionId.VarPhi, FunctionId.VarPi):
        return 1.0
    return math.exp(-ln_gamma(p.beta))


def _variable(fid: FunctionId, z: float):
    """t(z) as double-double and dt/dz, so the reduced series is sum a_n t^n."""
    if fid is FunctionId.Phi:
        return (z, 0.0), 1.0
    if fid in (FunctionId.Sigma, FunctionId.VarPi):
        return (-z, 0.0), -1.0
    hi, lo = _dd.two_prod(z, z)
    return (-hi, -lo), -2.0 * z


def _sum_series(fid: FunctionId, p: MLParams, z: float, tol: float, derivative: bool) -> EvalResult:
    if not math.isfinite(z):
        raise DomainError(f"z must be finite, got {z!r}")
    if not (tol > 0.0):
        raise DomainError(f"tol must be positive, got {tol!r}")
    table = _table(fid, p)
    common = _common_factor(fid, p)
    try:
        t, dt = _variable(fid, z)
    except OverflowError:
        raise CoefficientOverflow(f"z = {z} too large") from None

    if t[0] == 0.0:
        if not derivative:
            v = common * table.coef(0)
            return EvalResult(v, 1, 1.0 if v else math.inf, abs(v), DBL_EPS * abs(v))
        if dt == 0.0:
            return EvalResult(0.0, 1, math.inf, 0.0, 0.0)
        v = common * dt * table.coef(1)
        return EvalResult(v, 2, 1.0 if v else math.inf, abs(v), DBL_EPS * abs(v))

    cap = max_terms()
    start = 1 if derivative else 0
    acc = (0.0, 0.0)
    abs_sum = 0.0
    max_term = 0.0
    noise = 0.0
    prev = None
    small_run = 0
    n_used = 0
    log_abs_t = math.log(abs(t[0]))
    t_neg = t[0] < 0.0
    # exact path: base = (c_n/c_0) t^n by recurrence, so t^n is never formed on
    # its own; the derivative sum is sum n a_n t^n, divided by t afterwards
    base = (1.0, 0.0)
    try:
        if table.exact and derivative:
            base = t
        for n in range(start, cap + start):
            if table.exact:
                step, m = table.step_mult(n)
                if n > start or not derivative:
                    if n:
                        base = _dd.mul(base, _dd.mul(step, t))
                elif n:
                    base = _dd.mul(base, step)
                term = _dd.mul(base, m)
                if derivative:
                    term = _dd.mul_float(term, float(n))
                mag = abs(term[0])
            else:
                la, sa = table.log_signed(n)
                k = n - start
                if sa == 0.0:
                    val = 0.0
                else:
                    arg = la + k * log_abs_t + (math.log(n) if derivative else 0.0)
                    if arg > _LOG_MAX:
                        raise OverflowError
                    val = sa * math.exp(arg)
                    if t_neg and k % 2:
                        val = -val
                    noise += abs(val) * DBL_EPS * (2.0 + abs(arg))
                term = (val, 0.0)
                mag = abs(val)
            if not math.isfinite(mag):
                raise OverflowError
            acc = _dd.add(acc, term)
            abs_sum += mag
            max_term = max(max_term, mag)
            n_used += 1
            scale = max(abs(acc[0]), DBL_EPS * abs_sum)
            decaying = (mag == 0.0) if not prev else mag < 0.5 * prev
            if mag <= tol * scale and decaying:
                small_run += 1
                if small_run >= 3:
                    break
            else:
                small_run = 0
            prev = mag
        else:
            raise NonConvergence(
                f"{fid.value} series at z={z} did not meet the stopping rule in {cap} terms"
            )
    except OverflowError:
        raise CoefficientOverflow(f"{fid.value} series terms overflow at z={z}") from None

    if table.exact and derivative:
        acc = _dd.div(acc, t)
        abs_sum /= abs(t[0])
        max_term /= abs(t[0])
    factor = common * (dt if derivative else 1.0)
    vhi, vlo = _dd.mul_float(acc, factor)
    abs_sum *= abs(factor)
    max_term *= abs(factor)
    if table.exact:
        noise = 2.0 ** -100 * abs_sum * n_used
    else:
        noise *= abs(factor)
    noise += DBL_EPS * abs(vhi)
    ratio = max_term / abs(vhi) if vhi != 0.0 else math.inf
    return EvalResult(vhi, n_used, max(ratio, 1.0), abs_sum, noise, vlo)


def _check_positive_for_psi(fid: FunctionId, z: float):
    if fid in _PSI_FAMILY and not z > 0.0:
        raise DomainError(f"{fid.value} needs z > 0 (fractional power), got {z!r}")


def _psi_shift(fid: FunctionId, beta: float) -> float:
    return {FunctionId.Psi: beta, FunctionId.PsiPrime: beta - 1.0,
            FunctionId.PsiSecond: beta - 2.0}[fid]


def evaluate(fid, p: MLParams, z: float, tol: float = DEFAULT_SERIES_TOL) -> EvalResult:
    """Evaluate one of the nine series at real z.

    Partial sums are accumulated in double-double; summation stops once three
    consecutive terms are below ``tol`` times the partial sum and each is less
    than half its predecessor.
    """
    fid = FunctionId.parse(fid)
    z = float(z)
    _check_positive_for_psi(fid, z)
    res = _sum_series(fid, p, z, tol, derivative=False)
    if fid not in _PSI_FAMILY:
        return res
    pref = z ** _psi_shift(fid, p.beta)
    return EvalResult(res.value * pref, res.terms_used, res.max_term_ratio,
                      res.abs_sum * pref, res.error_estimate * pref, res.value_lo * pref)


def reduced_value(fid, p: MLParams, z: float, tol: float = DEFAULT_SERIES_TOL) -> EvalResult:
    """Series value without the Psi-family prefactor ``z**shift``.

    Identical to ``evaluate`` for the other six functions; defined for all
    real z.
    """
    return _sum_series(FunctionId.parse(fid), p, float(z), tol, derivative=False)


def reduced_derivative(fid, p: MLParams, z: float, tol: float = DEFAULT_SERIES_TOL) -> EvalResult:
    """Term-wise z-derivative of the reduced series (see ``reduced_value``)."""
    return _sum_series(FunctionId.parse(fid), p, float(z), tol, derivative=True)


def eval_lambda(p: MLParams, z: float, tol: float = DEFAULT_SERIES_TOL) -> EvalResult:
    return _sum_series(FunctionId.Lambda, p, float(z), tol, derivative=False)


def eval_lambda_prime(p: MLParams, z: float, tol: float = DEFAULT_SERIES_TOL) -> EvalResult:
    """Derivative of lambda(z) = phi(alpha, beta, gamma, -z^2) by term-wise differentiation."""
    return _sum_series(FunctionId.Lambda, p, float(z), tol, derivative=True)
