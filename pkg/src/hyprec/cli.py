"""Deterministic command-line front end.

Subcommands: coeffs, eval, near-one, verify, classify, mean, gm-scan,
qprofile.  Every numeric flag accepts a decimal literal or an exact rational
"p/q"; a rational literal (or --rational) routes the coeffs and classify
subcommands through exact arithmetic end to end.  Output is byte-identical
for identical inputs.

Exit codes: 0 success, 2 flag validation error, 3 numerical failure
(domain error or non-convergence), 1 internal error.  The verify subcommand
instead exits with the number of failing properties (0 on full pass).

Environment: HYPREC_TERM_CAP overrides the series term cap and
HYPREC_QUAD_TOL the default quadrature tolerance.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify as verify_mod
from .coeffrec import (
    DEFAULT_N,
    MAX_N,
    WeightedSeriesSpec,
    cauchy_oracle,
    format_number,
    to_csv,
    to_json,
    u_general,
    u_theta_minus1,
    u_theta_plus1,
    v_log_product,
)
from .errors import DomainError, NonConvergence
from .hypergeom import (
    HypParams,
    euler_transform_eval,
    gauss_value_at_one,
    hyp2f1,
    hyp2f1_derivative,
    zero_balanced_asymptote,
)
from .schurmean import (
    DEFAULT_T_GRID,
    MeanParams,
    RegionTriple,
    classify_region,
    classify_region_fuzzed,
    gm_sign_scan,
    mean_quadrature,
    mean_series,
    q_p0_profile,
    scan_report_json,
    scan_reports_csv,
)

QUAD_TOL_ENV = "HYPREC_QUAD_TOL"
FORMATS = ("json", "csv", "plain")

RATIONAL_COMMANDS = ("coeffs", "classify")


class ValidationError(Exception):
    """A flag-level problem; maps to exit code 2."""


def _parse_number(raw: str, exact: bool):
    try:
        if exact or "/" in raw:
            return Fraction(raw)
        return float(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"cannot parse numeric literal {raw!r}: {exc}") from exc


def _wants_exact(args, flag_names) -> bool:
    if getattr(args, "rational", False):
        return True
    return any(
        "/" in raw for raw in (getattr(args, name) for name in flag_names) if raw is not None
    )


def _is_near_nonpositive_integer(c) -> bool:
    if isinstance(c, Fraction):
        return c <= 0 and c.denominator == 1
    nearest = round(c)
    return c <= 1e-12 and abs(c - nearest) < 1e-12 and nearest <= 0


def _check_c(c) -> None:
    if _is_near_nonpositive_integer(c):
        raise ValidationError(
            f"c={format_number(c)} is (within 1e-12) zero or a negative integer, "
            "which is outside the parameter domain"
        )


def _check_theta(theta) -> None:
    if not -1 <= theta <= 1:
        raise ValidationError(f"theta must lie in [-1, 1], got {format_number(theta)}")


def _check_mean_params(a, b) -> None:
    if not 0 < a < 1:
        raise ValidationError(f"a must lie in (0, 1), got {format_number(a)}")
    if not b > 0:
        raise ValidationError(f"b must be positive, got {format_number(b)}")


def _check_n(n: int) -> None:
    if n < 0:
        raise ValidationError(f"n must be nonnegative, got {n}")
    if n > MAX_N:
        raise ValidationError(f"n={n} exceeds the hard cap {MAX_N}")


def _parse_t_grid(raw: str | None, exact: bool = False):
    if raw is None:
        return None
    values = []
    for piece in raw.split(","):
        piece = piece.strip()
        if piece:
            values.append(_parse_number(piece, exact))
    if not values:
        raise ValidationError("empty t grid")
    for t in values:
        if not 0 < t < 1:
            raise ValidationError(f"grid points must lie in (0, 1), got {format_number(t)}")
    return values


def _quad_tol_default() -> float:
    raw = os.environ.get(QUAD_TOL_ENV)
    if raw is None:
        return 1e-10
    try:
        tol = float(raw)
    except ValueError as exc:
        raise ValidationError(f"{QUAD_TOL_ENV} must be a float, got {raw!r}") from exc
    if not tol > 0:
        raise ValidationError(f"{QUAD_TOL_ENV} must be positive, got {raw!r}")
    return tol


def _emit(text: str, sink) -> None:
    sink.write(text)
    if not text.endswith("\n"):
        sink.write("\n")


def _kv_lines(pairs) -> str:
    return "\n".join(f"{k} = {v}" for k, v in pairs) + "\n"


def _kv_csv(pairs) -> str:
    header = ",".join(k for k, _ in pairs)
    row = ",".join(str(v) for _, v in pairs)
    return f"{header}\n{row}\n"


# ---------------------------------------------------------------------------
# subcommand handlers


def _run_coeffs(args, sink) -> int:
    exact = _wants_exact(args, ("a", "b", "c", "p", "theta"))
    a = _parse_number(args.a, exact)
    b = _parse_number(args.b, exact)
    c = _parse_number(args.c, exact)
    _check_c(c)
    _check_n(args.n)
    p = _parse_number(args.p, exact) if args.p is not None else None
    theta = _parse_number(args.theta, exact) if args.theta is not None else None
    if theta is not None:
        _check_theta(theta)
    zero = Fraction(0) if exact else 0.0
    params = HypParams(a, b, c)
    family = args.family
    if family == "log":
        if args.p is not None or args.theta is not None:
            raise ValidationError("--p/--theta do not apply to the log-product family")
        seq = v_log_product(params, args.n)
    elif family == "theta1":
        if theta is not None and theta != 1:
            raise ValidationError("family theta1 fixes theta=1")
        seq = u_theta_plus1(params, p if p is not None else zero, args.n)
    elif family == "theta-1":
        if theta is not None and theta != -1:
            raise ValidationError("family theta-1 fixes theta=-1")
        seq = u_theta_minus1(params, p if p is not None else zero, args.n)
    else:
        spec = WeightedSeriesSpec(
            params,
            p if p is not None else zero,
            theta if theta is not None else zero,
        )
        seq = u_general(spec, args.n) if family == "general" else cauchy_oracle(spec, args.n)
    if args.format == "json":
        _emit(to_json(seq), sink)
    elif args.format == "csv":
        _emit(to_csv(seq), sink)
    else:
        _emit("\n".join(f"u_{n} = {format_number(v)}" for n, v in enumerate(seq.coeffs)), sink)
    return 0


def _eval_pairs(result):
    return (
        ("value", format_number(result.value)),
        ("error_bound", format_number(result.error_bound)),
        ("terms_used", result.terms_used),
    )


def _run_eval(args, sink) -> int:
    a = _parse_number(args.a, False)
    b = _parse_number(args.b, False)
    c = _parse_number(args.c, False)
    _check_c(c)
    x = _parse_number(args.x, False)
    params = HypParams(a, b, c)
    fn = hyp2f1_derivative if args.deriv else hyp2f1
    result = fn(params, x, args.tol)
    pairs = _eval_pairs(result)
    if args.format == "json":
        _emit(json.dumps({k: v for k, v in pairs}, sort_keys=True), sink)
    elif args.format == "csv":
        _emit(_kv_csv(pairs), sink)
    else:
        _emit(_kv_lines(pairs), sink)
    return 0


def _run_near_one(args, sink) -> int:
    a = _parse_number(args.a, False)
    b = _parse_number(args.b, False)
    if args.case == "zero-balanced":
        if args.x is None:
            raise ValidationError("--x is required for the zero-balanced asymptote")
        value = zero_balanced_asymptote(a, b, _parse_number(args.x, False))
        pairs = (("case", args.case), ("value", format_number(value)))
    else:
        if args.c is None:
            raise ValidationError(f"--c is required for case {args.case}")
        c = _parse_number(args.c, False)
        _check_c(c)
        params = HypParams(a, b, c)
        if args.case == "value-at-one":
            value = gauss_value_at_one(params)
            pairs = (("case", args.case), ("value", format_number(value)))
        else:
            if args.x is None:
                raise ValidationError("--x is required for the Euler-transform evaluation")
            result = euler_transform_eval(params, _parse_number(args.x, False), args.tol)
            pairs = (("case", args.case),) + _eval_pairs(result)
    if args.format == "json":
        _emit(json.dumps({k: v for k, v in pairs}, sort_keys=True), sink)
    elif args.format == "csv":
        _emit(_kv_csv(pairs), sink)
    else:
        _emit(_kv_lines(pairs), sink)
    return 0


def _run_classify(args, sink) -> int:
    exact = _wants_exact(args, ("a", "b", "m"))
    a = _parse_number(args.a, exact)
    b = _parse_number(args.b, exact)
    m = _parse_number(args.m, exact)
    _check_mean_params(a, b)
    triple = RegionTriple(MeanParams(a, b), m)
    if args.fuzz:
        label, boundary, (lo, hi) = classify_region_fuzzed(triple)
    else:
        label = classify_region(triple)
    m0_repr = format_number(label.m0) if exact else float(label.m0)
    payload = {"label": label.label.value, "m0": m0_repr, "branch": label.branch}
    if args.fuzz:
        payload["boundary"] = boundary
        payload["label_minus_eps"] = lo.label.value
        payload["label_plus_eps"] = hi.label.value
    if args.format == "json":
        _emit(json.dumps(payload, sort_keys=True), sink)
    elif args.format == "csv":
        _emit(_kv_csv(tuple(sorted(payload.items()))), sink)
    else:
        _emit(_kv_lines(tuple(sorted(payload.items()))), sink)
    return 0


def _run_mean(args, sink) -> int:
    a = _parse_number(args.a, False)
    b = _parse_number(args.b, False)
    _check_mean_params(a, b)
    x = _parse_number(args.x, False)
    y = _parse_number(args.y, False)
    if not (x > 0 and y > 0):
        raise ValidationError("x and y must be positive")
    mp = MeanParams(a, b)
    series_tol = args.tol if args.tol is not None else 1e-12
    quad_tol = args.tol if args.tol is not None else _quad_tol_default()
    pairs = []
    if args.method in ("series", "both"):
        pairs.append(("series", format_number(mean_series(x, y, mp, series_tol))))
    if args.method in ("quadrature", "both"):
        pairs.append(("quadrature", format_number(mean_quadrature(x, y, mp, quad_tol))))
    if args.method == "both":
        diff = abs(float(pairs[0][1]) - float(pairs[1][1]))
        pairs.append(("abs_difference", format_number(diff)))
    if args.format == "json":
        _emit(json.dumps({k: v for k, v in pairs}, sort_keys=True), sink)
    elif args.format == "csv":
        _emit(_kv_csv(tuple(pairs)), sink)
    else:
        _emit(_kv_lines(tuple(pairs)), sink)
    return 0


def _run_gm_scan(args, sink) -> int:
    a = _parse_number(args.a, False)
    b = _parse_number(args.b, False)
    m = _parse_number(args.m, False)
    _check_mean_params(a, b)
    grid = _parse_t_grid(args.tgrid)
    report = gm_sign_scan(
        RegionTriple(MeanParams(a, b), m),
        t_grid=grid,
        tol=args.tol,
        sign_tol=args.sign_tol,
    )
    if args.format == "json":
        _emit(scan_report_json(report), sink)
    elif args.format == "csv":
        _emit(scan_reports_csv([report]), sink)
    else:
        pairs = (
            ("label", report.label),
            ("branch", report.branch),
            ("gm_min", format_number(report.gm_min)),
            ("gm_max", format_number(report.gm_max)),
            ("consistent", report.consistent),
            ("sign_change_t", "-" if report.sign_change_t is None else format_number(report.sign_change_t)),
            ("warning", report.warning or "-"),
        )
        _emit(_kv_lines(pairs), sink)
    return 0


def _run_qprofile(args, sink) -> int:
    a = _parse_number(args.a, False)
    b = _parse_number(args.b, False)
    _check_mean_params(a, b)
    grid = _parse_t_grid(args.tgrid)
    ts = list(DEFAULT_T_GRID) if grid is None else [float(t) for t in grid]
    values = q_p0_profile(MeanParams(a, b), ts, args.tol)
    rows = list(zip(ts, values))
    if args.format == "json":
        payload = {"q": [[t, v] for t, v in rows]}
        _emit(json.dumps(payload, sort_keys=True), sink)
    elif args.format == "csv":
        _emit("t,Q\n" + "\n".join(f"{format_number(t)},{format_number(v)}" for t, v in rows), sink)
    else:
        _emit(_kv_lines(tuple((f"Q({format_number(t)})", format_number(v)) for t, v in rows)), sink)
    return 0


def _run_verify(args, sink) -> int:
    summary = verify_mod.verify_driver(args.suite, args.seed)
    _emit(verify_mod.render(summary, args.format), sink)
    return summary.exit_code


_HANDLERS = {
    "coeffs": _run_coeffs,
    "eval": _run_eval,
    "near-one": _run_near_one,
    "classify": _run_classify,
    "mean": _run_mean,
    "gm-scan": _run_gm_scan,
    "qprofile": _run_qprofile,
    "verify": _run_verify,
}


def _positive_float(raw: str) -> float:
    value = float(raw)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {raw}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyprec",
        description="Recurrence-based coefficients of weighted hypergeometric series "
        "and the Schur m-power convexity analysis of the hypergeometric mean.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default="json")

    def add_rational_stub(p):
        # Accepted everywhere so unsupported subcommands can reject it with a
        # specific message instead of a generic argparse usage error.
        p.add_argument("--rational", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("coeffs", help="coefficient sequences by recurrence or oracle")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--p", default=None)
    p.add_argument("--theta", default=None)
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument(
        "--family",
        choices=("general", "theta1", "theta-1", "log", "oracle"),
        default="general",
    )
    p.add_argument("--rational", action="store_true")
    add_format(p)

    p = sub.add_parser("eval", help="evaluate F(a,b;c;x) or its derivative")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--tol", type=_positive_float, default=1e-12)
    p.add_argument("--deriv", action="store_true")
    add_rational_stub(p)
    add_format(p)

    p = sub.add_parser("near-one", help="behavior near x=1 (three explicit regimes)")
    p.add_argument("--case", choices=("value-at-one", "zero-balanced", "euler"), required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--c", default=None)
    p.add_argument("--x", default=None)
    p.add_argument("--tol", type=_positive_float, default=1e-12)
    add_rational_stub(p)
    add_format(p)

    p = sub.add_parser("classify", help="E+/E- membership of a triple (a,b,m)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--fuzz", action="store_true")
    p.add_argument("--rational", action="store_true")
    add_format(p)

    p = sub.add_parser("mean", help="hypergeometric mean M(x,y)")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.add_argument("--method", choices=("series", "quadrature", "both"), default="series")
    p.add_argument("--tol", type=_positive_float, default=None)
    add_rational_stub(p)
    add_format(p)

    p = sub.add_parser("gm-scan", help="sign scan of G_m over a t grid")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--tgrid", default=None, help="comma-separated t values in (0,1)")
    p.add_argument("--tol", type=_positive_float, default=1e-12)
    p.add_argument("--sign-tol", dest="sign_tol", type=_positive_float, default=1e-8)
    add_rational_stub(p)
    add_format(p)

    p = sub.add_parser("qprofile", help="weighted ratio profile Q_p0 on a t grid")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--tgrid", default=None)
    p.add_argument("--tol", type=_positive_float, default=1e-12)
    add_rational_stub(p)
    add_format(p)

    p = sub.add_parser("verify", help="run the seeded property suites")
    p.add_argument("--suite", choices=("all",) + verify_mod.SUITES, default="all")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=FORMATS, default="plain")
    add_rational_stub(p)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "rational", False) and args.command not in RATIONAL_COMMANDS:
        print(
            f"error: --rational is not supported by {args.command!r} "
            f"(supported: {', '.join(RATIONAL_COMMANDS)})",
            file=sys.stderr,
        )
        return 2
    try:
        return _HANDLERS[args.command](args, sys.stdout)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, NonConvergence) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except BrokenPipeError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
