"""Acceptance checks as data: each check yields report rows with the measured
value, the expectation, the tolerance and a pass flag.

``run_all`` is shared by the ``verify`` subcommand and the test suite.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

from .bounds import (
    closed_form_sums,
    convex_bounds,
    euler_rayleigh_bracket,
    rayleigh_sums,
    starlike_bounds,
)
from .domain import PlanePoint, WiStatus, in_wi, replay
from .oracles import reference_root
from .radii import Kind, Normalization, RadiusQuery, solve_radius
from .special import EVEN_IDS, ZERO_BEARING_IDS, FunctionId, MLParams, eval_lambda
from .zeros import check_interlacing, find_zeros, weierstrass_product

ORACLE = MLParams(2.0, 2.0, 1.0)
SWEEP_GRID = (
    MLParams(3.0, 0.75, 1.0),
    MLParams(3.0, 1.8, 0.5),
    MLParams(3.0, 2.25, 2.0),
    MLParams(6.0, 0.75, 1.0),
)
SWEEP_RHOS = (0.0, 0.25, 0.5, 0.75)
BOUND_CASES = (
    (Normalization.F, Kind.Starlike),
    (Normalization.G, Kind.Starlike),
    (Normalization.H, Kind.Starlike),
    (Normalization.G, Kind.Convex),
    (Normalization.H, Kind.Convex),
)
TIME_LIMIT_VERIFY = 120.0


@dataclass(frozen=True)
class Row:
    criterion: int
    name: str
    measured: str
    expected: str
    tolerance: str
    passed: bool

    def as_dict(self) -> dict:
        return asdict(self)


def _g(v) -> str:
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, (tuple, list)):
        return "(" + ", ".join(_g(x) for x in v) + ")"
    return str(v)


def _solve(p, n, kind, rho=0.0):
    return solve_radius(RadiusQuery(p, n, kind, rho), quiet_domain=True)


def _label(p: MLParams) -> str:
    return f"({p.alpha:g},{p.beta:g},{p.gamma:g})"


def _power(n: Normalization) -> float:
    return 1.0 if n is Normalization.H else 2.0


# ---------------------------------------------------------------------------


def check_oracle_radii() -> list:
    h_ref = reference_root("h_convex", 1) ** 2
    f_ref = reference_root("f_convex", 1)
    tan_ref = reference_root("tan_eq_neg", 1)
    expect = {
        (Normalization.G, Kind.Starlike): math.pi / 2,
        (Normalization.F, Kind.Starlike): tan_ref,
        (Normalization.H, Kind.Starlike): tan_ref ** 2,
        (Normalization.G, Kind.Convex): reference_root("rtanr_eq_1", 1),
        (Normalization.H, Kind.Convex): h_ref,
        (Normalization.F, Kind.Convex): f_ref,
    }
    rows = []
    for (n, kind), ref in expect.items():
        t0 = time.perf_counter()
        value = _solve(ORACLE, n, kind).value
        dt = time.perf_counter() - t0
        err = abs(value - ref)
        rows.append(Row(1, f"{kind.value} {n.value.lower()} at (2,2,1)", _g(value),
                        f"{_g(ref)} in < 1 s (took {dt:.3f} s)", "1e-08 abs",
                        err <= 1e-8 and dt < 1.0))
    return rows


def check_oracle_bounds() -> list:
    exact = {
        (Normalization.F, Kind.Starlike): (11 / 60, 1 / 3),
        (Normalization.G, Kind.Starlike): (1 / 3, 1 / 2),
        (Normalization.H, Kind.Starlike): (11 / 60, 1 / 3),
        (Normalization.G, Kind.Convex): (1.5 - 5 / 18, 1.5),
        (Normalization.H, Kind.Convex): (2 / 3 - 9 / 40, 2 / 3),
    }
    rows = []
    for (n, kind), (lo, hi) in exact.items():
        b = starlike_bounds(n, ORACLE) if kind is Kind.Starlike else convex_bounds(n, ORACLE)
        endpoints_ok = abs(b.lower - lo) <= 1e-14 and abs(b.upper - hi) <= 1e-14
        m = _solve(ORACLE, n, kind).value ** -_power(n)
        margin = min(m - b.lower, b.upper - m)
        rows.append(Row(2, f"{b.quantity} at (2,2,1)", _g(m), f"in {_g((lo, hi))}",
                        "margin >= 1e-3", endpoints_ok and margin >= 1e-3))
    return rows


def _sweep_point(p: MLParams) -> list:
    rows = []
    label = _label(p)
    radii0 = {}
    for n in Normalization:
        for kind in Kind:
            radii0[(n, kind)] = _solve(p, n, kind).value
    # (i) bound sandwiches
    for n, kind in BOUND_CASES:
        b = starlike_bounds(n, p) if kind is Kind.Starlike else convex_bounds(n, p)
        m = radii0[(n, kind)] ** -_power(n)
        rows.append(Row(3, f"{label} {b.quantity} sandwich", _g(m), f"in {_g((b.lower, b.upper))}",
                        "strict", b.lower < m < b.upper))
    # (ii) interlacing of lambda and xi zeros
    lam = find_zeros(FunctionId.Lambda, p, 10)
    xi = find_zeros(FunctionId.PsiPrime, p, 10)
    rows.append(Row(3, f"{label} lambda/xi interlacing, 10 zeros",
                    f"lambda_10 = {_g(lam[-1])}, xi_10 = {_g(xi[-1])}", "xi_1 < lambda_1 < xi_2 < ...",
                    "margin 1e-12", check_interlacing(lam, xi)))
    # (iii) strict decrease in rho
    for n in Normalization:
        for kind in Kind:
            seq = [radii0[(n, kind)]] + [_solve(p, n, kind, r).value for r in SWEEP_RHOS[1:]]
            ok = all(a > b for a, b in zip(seq, seq[1:]))
            rows.append(Row(3, f"{label} {kind.value} {n.value.lower()} decreasing in rho",
                            _g(tuple(seq)), "strictly decreasing", "strict", ok))
    # (iv) convex below starlike
    for n in Normalization:
        c, s = radii0[(n, Kind.Convex)], radii0[(n, Kind.Starlike)]
        rows.append(Row(3, f"{label} convex < starlike for {n.value.lower()}", _g((c, s)),
                        "convex < starlike", "strict", c < s))
    return rows


def check_sweep(jobs: int = 1) -> list:
    t0 = time.perf_counter()
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        parts = list(pool.map(_sweep_point, SWEEP_GRID))
    dt = time.perf_counter() - t0
    rows = [r for part in parts for r in part]
    rows.append(Row(3, "sweep runtime", f"{dt:.2f} s", "< 60 s", "", dt < 60.0))
    return rows


_SUM_IDS = (FunctionId.PsiPrime, FunctionId.Omega, FunctionId.Sigma,
            FunctionId.VarPhi, FunctionId.VarPi, FunctionId.Lambda)


def check_rayleigh_identities() -> list:
    rows = []
    for p in SWEEP_GRID + (ORACLE,):
        for fid in _SUM_IDS:
            s = rayleigh_sums(fid, p, 2)
            c1, c2 = closed_form_sums(fid, p)
            rel = max(abs(s.S(1) - c1) / abs(c1), abs(s.S(2) - c2) / abs(c2))
            rows.append(Row(4, f"{_label(p)} {fid.value} S1, S2 vs closed form",
                            _g((s.S(1), s.S(2))), _g((c1, c2)), "1e-10 rel", rel <= 1e-10))
    om = rayleigh_sums(FunctionId.Omega, ORACLE, 2)
    ok = abs(om.S(1) - 0.5) <= 1e-12 and abs(om.S(2) - 1 / 6) <= 1e-12
    rows.append(Row(4, "(2,2,1) Omega sums", _g((om.S(1), om.S(2))), "(1/2, 1/6)", "1e-12", ok))
    lam = rayleigh_sums(FunctionId.Lambda, ORACLE, 1).S(1)
    rows.append(Row(4, "(2,2,1) Lambda S1", _g(lam), "1/6", "1e-12", abs(lam - 1 / 6) <= 1e-12))
    return rows


def check_euler_rayleigh(kmax: int = 4) -> list:
    rows = []
    tol = 1e-9
    for p in (ORACLE,) + SWEEP_GRID:
        for fid in sorted(ZERO_BEARING_IDS, key=lambda f: f.value):
            z1 = find_zeros(fid, p, 1)[0]
            w1 = z1 * z1 if fid in EVEN_IDS else z1
            s = rayleigh_sums(fid, p, kmax + 1)
            brackets = [euler_rayleigh_bracket(s, k) for k in range(1, kmax + 1)]
            contains = all(lo - tol * w1 < w1 < hi + tol * w1 for lo, hi in brackets)
            nested = all(b[0] >= a[0] - tol * w1 and b[1] <= a[1] + tol * w1
                         for a, b in zip(brackets, brackets[1:]))
            lo4, hi4 = brackets[-1]
            rows.append(Row(5, f"{_label(p)} {fid.value} brackets k=1..{kmax}", _g(w1),
                            f"in nested brackets, k={kmax}: {_g((lo4, hi4))}", "1e-09 rel",
                            contains and nested))
    return rows


def check_weierstrass() -> list:
    rows = []
    # series zeros on the prefix the double-double engine resolves, as a cross-check
    prefix = find_zeros(FunctionId.Lambda, ORACLE, 12)
    dev = max(abs(prefix[i] - reference_root("sin_zero", i + 1)) for i in range(len(prefix)))
    rows.append(Row(6, "(2,2,1) series zeros vs n*pi, first 12", _g(dev), "0", "1e-10", dev <= 1e-10))
    zeros = [reference_root("sin_zero", n) for n in range(1, 1001)]
    target = eval_lambda(ORACLE, 1.0).value
    errors = []
    for N in (125, 250, 500, 1000):
        errors.append(abs(weierstrass_product(zeros[:N], 1.0, ORACLE.beta) - target) / abs(target))
    rows.append(Row(6, "(2,2,1) product, N=1000, z=1", _g(errors[-1]), "<= 1e-3 rel", "1e-3",
                    errors[-1] <= 1e-3))
    dec = all(a > b for a, b in zip(errors, errors[1:]))
    rows.append(Row(6, "product error as N doubles 125..1000", _g(tuple(errors)),
                    "strictly decreasing", "strict", dec))
    return rows


def _replay_error(verdict, x, beta) -> float:
    q = replay(verdict.seed, verdict.witness)
    return max(abs(q.x - x), abs(q.beta - beta))


def check_wi() -> list:
    rows = []
    cases = (
        ((1 / 3, 0.75), WiStatus.Member, ()),
        ((1 / 6, 0.75), WiStatus.Member, ("A",)),
        ((0.6, 1.0), WiStatus.NonMember, None),
    )
    for (x, beta), status, witness in cases:
        v = in_wi(PlanePoint(x, beta))
        ok = v.status is status
        if witness is not None:
            ok = ok and tuple(t.value for t in v.witness) == witness
        got = v.status.value + (f" {[t.value for t in v.witness]}" if v.status is WiStatus.Member else "")
        exp = status.value + (f" {list(witness)}" if witness is not None else "")
        rows.append(Row(7, f"W_i decision at ({_g(x)}, {_g(beta)})", got, exp, "exact", ok))
    points = [(1 / 3, 0.75), (1 / 6, 0.75), (1 / 3, 0.1), (1 / 3, 1.8), (1 / 3, 2.25),
              (1 / 6, 0.75), (1 / 12, 3.3), (0.2, 4.7), (0.45, 2.1)]
    worst = 0.0
    ok = True
    for x, beta in points:
        v = in_wi(PlanePoint(x, beta))
        if v.status is WiStatus.Member:
            worst = max(worst, _replay_error(v, x, beta))
    ok = worst <= 1e-12
    rows.append(Row(7, f"witness replay over {len(points)} points", _g(worst), "0", "1e-12", ok))
    return rows


def check_hg_law() -> list:
    rows = []
    for p in SWEEP_GRID:
        for rho in (0.5, 0.6, 0.75):
            h = _solve(p, Normalization.H, Kind.Starlike, rho).value
            g = _solve(p, Normalization.G, Kind.Starlike, 2 * rho - 1).value
            rows.append(Row(8, f"{_label(p)} h at rho={rho:g} vs g^2 at {2 * rho - 1:g}",
                            _g(h), _g(g * g), "1e-09", abs(h - g * g) <= 1e-9))
    return rows


CHECKS = (
    (1, check_oracle_radii),
    (2, check_oracle_bounds),
    (3, check_sweep),
    (4, check_rayleigh_identities),
    (5, check_euler_rayleigh),
    (6, check_weierstrass),
    (7, check_wi),
    (8, check_hg_law),
)


def run_all(jobs: int = 1) -> list:
    """Run criteria 1-8, then add the overall runtime row (criterion 9)."""
    t0 = time.perf_counter()
    rows = []
    for number, check in CHECKS:
        rows.extend(check(jobs) if check is check_sweep else check())
    dt = time.perf_counter() - t0
    rest_ok = all(r.passed for r in rows)
    rows.append(Row(9, "full suite runtime, all properties pass", f"{dt:.2f} s",
                    f"< {TIME_LIMIT_VERIFY:g} s", "", dt < TIME_LIMIT_VERIFY and rest_ok))
    return rows


def summarize(rows) -> dict:
    """criterion -> passed (all rows of that criterion)."""
    out = {}
    for r in rows:
        out[r.criterion] = out.get(r.criterion, True) and r.passed
    return out


def to_markdown(rows) -> str:
    lines = ["| # | property | measured | expected | tolerance | pass |",
             "|---|---|---|---|---|---|"]
    for r in rows:
        cells = [str(r.criterion), r.name, r.measured, r.expected, r.tolerance,
                 "yes" if r.passed else "NO"]
        lines.append("| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |")
    return "\n".join(lines)
