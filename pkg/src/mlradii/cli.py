"""Command-line front end.

Exit status: 0 on success, 1 on computation failures (and on a failing
``verify``), 2 on argument, domain or unsupported-query errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor

from . import verification
from .bounds import bounds as _bounds
from .domain import DEFAULT_EPS_DOM, PlanePoint, WiStatus, in_wi, wi_status_for
from .errors import ComputationError, DomainError, InvalidQuery, MLRadiiError
from .radii import Kind, Normalization, RadiusQuery, solve_radius
from .special import DEFAULT_SERIES_TOL, FunctionId, MLParams, evaluate, reduced_derivative
from .zeros import DEFAULT_ROOT_TOL, find_zeros


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _clean(v):
    """JSON-safe value: non-finite floats become null."""
    if isinstance(v, float):
        return v if math.isfinite(v) else None
    if isinstance(v, (list, tuple)):
        return [_clean(x) for x in v]
    if isinstance(v, dict):
        return {k: _clean(x) for k, x in v.items()}
    return v


def _flatten(record: dict, prefix: str = "") -> dict:
    out = {}
    for k, v in record.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            out.update(_flatten(v, key + "."))
        elif isinstance(v, (list, tuple)):
            out[key] = ";".join("" if x is None else str(x) for x in v)
        else:
            out[key] = "" if v is None else v
    return out


def _emit(records: list, fmt: str, out) -> None:
    records = [_clean(r) for r in records]
    if fmt == "csv":
        flat = [_flatten(r) for r in records]
        fields = []
        for row in flat:
            fields.extend(k for k in row if k not in fields)
        w = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
        w.writeheader()
        w.writerows(flat)
        return
    payload = records[0] if len(records) == 1 else records
    out.write(json.dumps(payload, indent=2) + "\n")


def _params(args) -> MLParams:
    return MLParams(args.alpha, args.beta, args.gamma)


def _require_wi(args, p: MLParams):
    if args.require_wi:
        v = wi_status_for(p.alpha, p.beta, args.eps_dom)
        if v.status is not WiStatus.Member:
            raise DomainError(
                f"(1/alpha, beta) = ({1 / p.alpha:g}, {p.beta:g}) is {v.status.value}, "
                "not a W_i member (--require-wi)"
            )


def _query_dict(p: MLParams, **extra) -> dict:
    return {"alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, **extra}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_eval(args):
    p = _params(args)
    fid = FunctionId.parse(args.function)
    records = []
    for z in args.z:
        if args.derivative:
            res = reduced_derivative(fid, p, z, args.series_tol)
        else:
            res = evaluate(fid, p, z, args.series_tol)
        records.append({
            "query": _query_dict(p, function=fid.value, z=z, derivative=args.derivative),
            "result": {"value": res.value, "terms_used": res.terms_used,
                       "max_term_ratio": res.max_term_ratio,
                       "error_estimate": res.error_estimate, "flagged": res.flagged},
        })
    return records


def _cmd_zeros(args):
    p = _params(args)
    _require_wi(args, p)
    fid = FunctionId.parse(args.function)
    seq = find_zeros(fid, p, args.count, args.root_tol, args.series_tol)
    if args.format == "csv":
        return [{"query": _query_dict(p, function=fid.value), "n": i + 1, "zero": z}
                for i, z in enumerate(seq)]
    return [{"query": _query_dict(p, function=fid.value, count=args.count),
             "result": {"zeros": list(seq.zeros), "tol": seq.tol}}]


def _radius_record(p, normalization, kind, rho, args):
    q = RadiusQuery(p, normalization, kind, rho)
    r = solve_radius(q, args.root_tol, args.series_tol, args.eps_dom)
    return {
        "query": _query_dict(p, normalization=q.normalization.value, kind=q.kind.value, rho=q.rho),
        "result": {"value": r.value, "bracket": list(r.bracket), "residual": r.residual,
                   "iterations": r.iterations, "wi_status": r.wi_status.value,
                   "warnings": list(r.warnings)},
    }


def _cmd_radius(args):
    p = _params(args)
    _require_wi(args, p)
    return [_radius_record(p, args.normalization, args.kind, args.rho, args)]


def _cmd_bounds(args):
    p = _params(args)
    _require_wi(args, p)
    b = _bounds(args.normalization, args.kind, p, args.k)
    return [{
        "query": _query_dict(p, normalization=Normalization.parse(args.normalization).value,
                             kind=Kind.parse(args.kind).value, k=args.k),
        "result": {"quantity": b.quantity, "lower": b.lower, "upper": b.upper,
                   "radius_lower": b.upper ** (-1.0 / _exponent(args.normalization)),
                   "radius_upper": b.lower ** (-1.0 / _exponent(args.normalization))
                   if b.lower > 0 else math.inf},
    }]


def _exponent(n) -> float:
    return 1.0 if Normalization.parse(n) is Normalization.H else 2.0


def _cmd_wi_check(args):
    if args.alpha <= 1.0:
        raise DomainError(f"alpha must exceed 1 so that x = 1/alpha lies in (0, 1), got {args.alpha!r}")
    pt = PlanePoint.from_alpha(args.alpha, args.beta)
    v = in_wi(pt, args.eps_dom)
    result = {"status": v.status.value, "witness": [t.value for t in v.witness]}
    if v.seed is not None:
        result["seed"] = {"x": v.seed.x, "beta": v.seed.beta}
    if v.notes:
        result["notes"] = list(v.notes)
    return [{"query": {"alpha": args.alpha, "beta": args.beta, "x": pt.x, "eps_dom": args.eps_dom},
             "result": result}]


def _load_grid(args) -> list:
    """(MLParams, rho list) pairs, from --grid or from the inline flags."""
    default_rhos = args.rho if args.rho else [0.0]
    if args.grid:
        try:
            with open(args.grid, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InvalidQuery(f"cannot read grid file {args.grid!r}: {exc}") from None
        if not isinstance(data, list):
            raise InvalidQuery("grid file must hold a JSON array of {alpha, beta, gamma, rho?}")
        points = []
        for i, entry in enumerate(data):
            if not isinstance(entry, dict) or not {"alpha", "beta", "gamma"} <= entry.keys():
                raise InvalidQuery(f"grid entry {i} needs alpha, beta and gamma")
            rho = entry.get("rho", default_rhos)
            rhos = rho if isinstance(rho, list) else [rho]
            points.append((MLParams(entry["alpha"], entry["beta"], entry["gamma"]), rhos))
        return points
    if args.alpha is None or args.beta is None or args.gamma is None:
        raise InvalidQuery("table needs --grid or all of --alpha, --beta, --gamma")
    return [(MLParams(args.alpha, args.beta, args.gamma), default_rhos)]


def _cmd_table(args):
    grid = _load_grid(args)
    norms = [Normalization.parse(n) for n in (args.normalization or ["F", "G", "H"])]
    kinds = [Kind.parse(k) for k in (args.kind or ["starlike", "convex"])]
    for p, rhos in grid:
        for rho in rhos:
            RadiusQuery(p, Normalization.F, Kind.Starlike, rho)  # validate rho up front
        _require_wi(args, p)
    tasks = [(p, n, k, rho) for p, rhos in grid for n in norms for k in kinds for rho in rhos]
    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        records = list(pool.map(lambda t: _radius_record(*t, args), tasks))
    return records


def _cmd_verify(args, out):
    rows = verification.run_all(args.jobs)
    if args.format == "csv":
        _emit([r.as_dict() for r in rows], "csv", out)
    elif args.format == "json":
        out.write(json.dumps([r.as_dict() for r in rows], indent=2) + "\n")
    else:
        out.write(verification.to_markdown(rows) + "\n")
    return 0 if all(r.passed for r in rows) else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json",
                        help="output format (default: json)")
    common.add_argument("--series-tol", type=float, default=DEFAULT_SERIES_TOL,
                        help=f"relative series truncation tolerance (default: {DEFAULT_SERIES_TOL:g})")
    common.add_argument("--root-tol", type=float, default=DEFAULT_ROOT_TOL,
                        help=f"bisection width for zeros and radii (default: {DEFAULT_ROOT_TOL:g})")
    common.add_argument("--eps-dom", type=float, default=DEFAULT_EPS_DOM,
                        help=f"W_i boundary tolerance (default: {DEFAULT_EPS_DOM:g})")
    common.add_argument("--require-wi", action="store_true",
                        help="treat parameters outside W_i as an error instead of a warning")

    params = _Parser(add_help=False)
    params.add_argument("--alpha", type=float, required=True)
    params.add_argument("--beta", type=float, required=True)
    params.add_argument("--gamma", type=float, required=True)

    parser = _Parser(prog="mlradii", description="Radii of starlikeness and convexity for "
                     "normalized three-parameter Mittag-Leffler functions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common, params], help="evaluate a series")
    p.add_argument("--function", required=True, help="Phi, Lambda, Psi, PsiPrime, PsiSecond, "
                   "Omega, Sigma, VarPhi or VarPi")
    p.add_argument("--z", type=float, nargs="+", required=True)
    p.add_argument("--derivative", action="store_true",
                   help="term-wise derivative of the series without the z^s prefactor")

    p = sub.add_parser("zeros", parents=[common, params], help="first positive zeros")
    p.add_argument("--function", required=True)
    p.add_argument("--count", type=int, default=10)

    p = sub.add_parser("radius", parents=[common, params], help="solve one radius")
    p.add_argument("--normalization", required=True, help="f, g or h")
    p.add_argument("--kind", required=True, help="starlike or convex")
    p.add_argument("--rho", type=float, default=0.0)

    p = sub.add_parser("bounds", parents=[common, params], help="Euler-Rayleigh bounds")
    p.add_argument("--normalization", required=True)
    p.add_argument("--kind", required=True)
    p.add_argument("--k", type=int, default=1, help="bound order (1 = closed form)")

    p = sub.add_parser("wi-check", parents=[common], help="W_i membership of (1/alpha, beta)")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)

    p = sub.add_parser("table", parents=[common], help="radii over a parameter grid")
    p.add_argument("--grid", help="JSON array of {alpha, beta, gamma, rho?}")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.add_argument("--gamma", type=float)
    p.add_argument("--rho", type=float, nargs="+")
    p.add_argument("--normalization", nargs="+")
    p.add_argument("--kind", nargs="+")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("verify", help="run the acceptance suite and print a report")
    p.add_argument("--format", choices=("markdown", "csv", "json"), default="markdown")
    p.add_argument("--jobs", type=int, default=1)
    return parser


_COMMANDS = {
    "eval": _cmd_eval,
    "zeros": _cmd_zeros,
    "radius": _cmd_radius,
    "bounds": _cmd_bounds,
    "wi-check": _cmd_wi_check,
    "table": _cmd_table,
}


def run(argv=None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        if args.command == "verify":
            return _cmd_verify(args, out)
        buf = io.StringIO()
        _emit(_COMMANDS[args.command](args), args.format, buf)
        out.write(buf.getvalue())
        return 0
    except ComputationError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except (MLRadiiError, ValueError) as exc:
        err.write(f"{exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
