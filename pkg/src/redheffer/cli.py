"""Command-line front end.

Exit codes: 0 when every reported check holds, 1 when a check fails
(inequality violated, bound not met), 2 on usage or domain errors.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import inequality as ineq
from . import qpe
from . import thresholds as thr
from .errors import BracketError, DomainError, ResourceError

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _round(v: float, precision: int) -> float:
    if precision >= 17 or not math.isfinite(v):
        return v
    return float(f"{v:.{precision}g}")


def _cell(v, precision):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(_round(v, precision))
    return str(v)


def _json_value(v, precision):
    if isinstance(v, float) and not isinstance(v, bool):
        return _round(v, precision)
    return v


def render(rows: list[dict], fmt: str, precision: int = 17, single: bool = True) -> str:
    if fmt == "json":
        objs = [{k: _json_value(v, precision) for k, v in r.items()} for r in rows]
        payload = objs[0] if single and len(objs) == 1 else objs
        return json.dumps(payload, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(rows[0]))
    for r in rows:
        writer.writerow([_cell(v, precision) for v in r.values()])
    return buf.getvalue()


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------- commands


def cmd_thresholds(args):
    cfg = thr.SolverConfig(alpha_tol=args.alpha_tol, y_grid=args.y_grid)
    rows = [
        {
            "n": r.n,
            "alpha_n": r.alpha_n,
            "beta_n": r.beta_n,
            "gamma_n": r.gamma_n,
            "alpha_eq_beta": r.alpha_eq_beta,
        }
        for r in thr.threshold_table(args.n_max, cfg)
    ]
    return rows, True, False


def cmd_verify(args):
    rep = thr.certify_inequality(args.alpha, args.grid, args.threads)
    row = {
        "alpha": rep.alpha,
        "grid": rep.grid_count,
        "min_margin": rep.min_margin,
        "argmin_x": rep.argmin_x,
        "pass": rep.passed,
    }
    return [row], rep.passed, True


def cmd_gscan(args):
    rep = thr.g_scan(args.n, args.alpha, args.grid, args.threads)
    row = {
        "n": rep.n,
        "alpha": rep.alpha,
        "min_g": rep.min_g,
        "argmin_y": rep.argmin_y,
        "pass": rep.passed,
    }
    return [row], rep.passed, True


def cmd_sharpness(args):
    x = thr.find_violation(args.alpha)
    row = {
        "alpha": float(args.alpha),
        "witness_x": x,
        "margin_at_witness": None if x is None else ineq.margin(args.alpha, x),
        "pass": x is None,
    }
    return [row], x is None, True


def cmd_corollary(args):
    rep = thr.corollary_scan(args.grid, args.threads)
    row = {"min_lhs": rep.min_lhs, "argmin_theta": rep.argmin_theta, "pass": rep.passed}
    return [row], rep.passed, True


def cmd_qpe(args):
    if not 0.0 <= args.phase < 1.0:
        raise DomainError("--phase must lie in [0, 1)")
    n, w = args.qubits, args.phase
    rep = qpe.success_probability(n, w)
    row = {
        "n": n,
        "w": w,
        "x_lo": rep.x_lo,
        "x_hi": rep.x_hi,
        "p_lo": rep.p_lo,
        "p_hi": rep.p_hi,
        "success_prob": rep.success_prob,
        "bound": rep.bound,
        "satisfied": rep.satisfied,
    }
    if args.dist:
        drows = []
        for x, p_sim in enumerate(qpe.outcome_distribution(n, w).probs):
            p_closed = qpe.closed_form_prob(n, w, x)
            drows.append(
                {
                    "x": x,
                    "delta": qpe.delta(w, n, x),
                    "p_closed": p_closed,
                    "p_sim": float(p_sim),
                    "abs_diff": abs(p_closed - float(p_sim)),
                }
            )
        _emit(render(drows, "csv", args.precision), args.dist)
    return [row], rep.satisfied, True


def cmd_constants(args):
    return [ineq.constants()], True, True


# ------------------------------------------------------------------ parser


def _positive_int(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    common.add_argument("--precision", type=int, default=17, help="significant digits (default 17)")
    common.add_argument("--threads", type=_positive_int, default=1)

    parser = argparse.ArgumentParser(
        prog="redheffer",
        description="Generalized Redheffer inequality and phase-estimation bound checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("thresholds", parents=[common], help="alpha_n, beta_n, gamma_n for n = 2..n_max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--alpha-tol", type=float, default=1e-8)
    p.add_argument("--y-grid", type=int, default=4097)
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("verify", parents=[common], help="minimum margin of the inequality on a grid")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--grid", type=int, default=100001)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gscan", parents=[common], help="minimum of G_{n,alpha} on [0, 1]")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--grid", type=int, default=4097)
    p.set_defaults(func=cmd_gscan)

    p = sub.add_parser("sharpness", parents=[common], help="search for a violating x near 1/2")
    p.add_argument("--alpha", type=float, required=True)
    p.set_defaults(func=cmd_sharpness)

    p = sub.add_parser("corollary", parents=[common], help="minimum of the corollary bound on (0, 1)")
    p.add_argument("--grid", type=int, default=100001)
    p.set_defaults(func=cmd_corollary)

    p = sub.add_parser("qpe", parents=[common], help="phase-estimation success probability")
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--phase", type=float, required=True)
    p.add_argument("--dist", metavar="PATH", help="also write the full outcome distribution as CSV")
    p.set_defaults(func=cmd_qpe)

    p = sub.add_parser("constants", parents=[common], help="named constants at full precision")
    p.set_defaults(func=cmd_constants)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        rows, ok, single = args.func(args)
    except (DomainError, BracketError, ResourceError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(render(rows, args.format, args.precision, single), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
