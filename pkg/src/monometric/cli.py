"""Command-line driver.

Commands: eval-f, eval-c, metric, bridge-table, verify. Numeric output
uses 15 significant digits; identical flags and seed give byte-identical
stdout. Exit codes: 0 success, 1 verification failure, 2 malformed
input, 3 quadrature failure, 4 invalid state.

The environment variable MONOMETRIC_QUAD_TOL, when set, overrides the
absolute quadrature tolerance for the whole invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import replace

import numpy as np

from .chentsov import eval_bridge
from .errors import (
    DomainError,
    MonometricError,
    NotAState,
    QuadratureFailure,
)
from .io import load_json_file, matrix_from_json, mc_from_json, monotone_from_json, weight_from_json
from .metric import DensityMatrix, MetricSpec, metric_form, metric_quadratic
from .monotone import CanonicalMonotone, GammaFamily
from .quadrature import DEFAULT_QUAD, QuadratureConfig
from .verify import SUITE_NAMES, report_to_dict, run_verification

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_MALFORMED = 2
EXIT_QUADRATURE = 3
EXIT_NOT_A_STATE = 4


def fmt15(value: float) -> str:
    """15 significant digits, with a trailing .0 on integral values."""
    out = f"{float(value):.15g}"
    if "." not in out and "e" not in out and "n" not in out and "f" not in out:
        out += ".0"
    return out


def _quad_from_env() -> QuadratureConfig:
    raw = os.environ.get("MONOMETRIC_QUAD_TOL")
    if raw is None:
        return DEFAULT_QUAD
    try:
        tol = float(raw)
    except ValueError as exc:
        raise DomainError(f"MONOMETRIC_QUAD_TOL={raw!r} is not a number") from exc
    if not tol > 0.0:
        raise DomainError(f"MONOMETRIC_QUAD_TOL={raw!r} must be positive")
    return replace(DEFAULT_QUAD, abs_tol=tol)


def _parse_grid(spec: str) -> list[float]:
    """Grid spec: 'a,b,c' literal, or 'log:LO:HI:N' / 'lin:LO:HI:N'."""
    if spec.startswith(("log:", "lin:")):
        parts = spec.split(":")
        if len(parts) != 4:
            raise DomainError(f"bad grid spec {spec!r}: want kind:lo:hi:n")
        try:
            lo, hi, n = float(parts[1]), float(parts[2]), int(parts[3])
        except ValueError as exc:
            raise DomainError(f"bad grid spec {spec!r}: {exc}") from exc
        if n < 1:
            raise DomainError(f"bad grid spec {spec!r}: need n >= 1")
        if parts[0] == "log":
            if not (lo > 0.0 and hi > 0.0):
                raise DomainError(f"bad grid spec {spec!r}: log grid needs positive ends")
            return [float(v) for v in np.geomspace(lo, hi, n)]
        return [float(v) for v in np.linspace(lo, hi, n)]
    try:
        return [float(tok) for tok in spec.split(",") if tok]
    except ValueError as exc:
        raise DomainError(f"bad grid value in {spec!r}: {exc}") from exc


def _parse_float_list(raw: str, label: str) -> list[float]:
    try:
        return [float(tok) for tok in raw.split(",") if tok]
    except ValueError as exc:
        raise DomainError(f"bad {label} list {raw!r}: {exc}") from exc


def _parse_int_list(raw: str, label: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok]
    except ValueError as exc:
        raise DomainError(f"bad {label} list {raw!r}: {exc}") from exc


def cmd_eval_f(args, quad: QuadratureConfig) -> int:
    if (args.family is None) == (args.h_file is None):
        raise DomainError("give exactly one of --family or --h-file")
    if not args.t > 0.0:
        raise DomainError(f"--t {args.t} must be positive")
    if args.family is not None:
        if args.family != "gamma":
            raise DomainError(f"unknown family {args.family!r}")
        if args.gamma is None:
            raise DomainError("--family gamma needs --gamma")
        value = GammaFamily(args.gamma)(args.t)
    else:
        h = weight_from_json(load_json_file(args.h_file))
        if args.beta == "auto":
            f = CanonicalMonotone.normalized(h, quad)
        else:
            try:
                f = CanonicalMonotone(beta=float(args.beta), h=h, quad=quad)
            except ValueError as exc:
                raise DomainError(f"--beta {args.beta!r} is not a number") from exc
        value = f(args.t)
    print(fmt15(value))
    return EXIT_OK


def cmd_eval_c(args, quad: QuadratureConfig) -> int:
    sources = [args.bridge is not None, args.h_file is not None, args.from_f is not None]
    if sum(sources) != 1:
        raise DomainError("give exactly one of --bridge, --h-file, --from-f")
    if not (args.x > 0.0 and args.y > 0.0):
        raise DomainError(f"--x {args.x} and --y {args.y} must be positive")
    if args.bridge is not None:
        value = eval_bridge(args.bridge, args.x, args.y)
    elif args.h_file is not None:
        spec = {"kind": "canonical", "h": load_json_file(args.h_file), "c0": args.c0}
        if args.c0 != "auto":
            try:
                spec["c0"] = float(args.c0)
            except ValueError as exc:
                raise DomainError(f"--c0 {args.c0!r} is not a number") from exc
        value = mc_from_json(spec, quad)(args.x, args.y)
    else:
        f = monotone_from_json(load_json_file(args.from_f), quad)
        value = 1.0 / (args.y * f(args.x / args.y))
    print(fmt15(value))
    return EXIT_OK


def cmd_metric(args, quad: QuadratureConfig) -> int:
    rho = DensityMatrix.from_matrix(matrix_from_json(load_json_file(args.rho)))
    a = matrix_from_json(load_json_file(args.a))
    kernel = mc_from_json(load_json_file(args.c_spec), quad)
    spec = MetricSpec(c=kernel, diagonal_constant=args.big_c)
    if args.b is None:
        print(fmt15(metric_quadratic(spec, rho, a)))
    else:
        b = matrix_from_json(load_json_file(args.b))
        value = metric_form(spec, rho, a, b)
        print(f"{fmt15(value.real)} {fmt15(value.imag)}")
    return EXIT_OK


def cmd_bridge_table(args, quad: QuadratureConfig) -> int:
    gammas = _parse_float_list(args.gammas, "gamma")
    xs = _parse_grid(args.x_grid)
    ys = _parse_grid(args.y_grid)
    if not gammas or not xs or not ys:
        raise DomainError("gamma list and both grids must be non-empty")
    out = sys.stdout
    out.write("gamma,x,y,c\n")
    for g in gammas:
        for x in xs:
            for y in ys:
                c = eval_bridge(g, x, y)
                out.write(f"{fmt15(g)},{fmt15(x)},{fmt15(y)},{fmt15(c)}\n")
    return EXIT_OK


def cmd_verify(args, quad: QuadratureConfig) -> int:
    if args.suite not in (*SUITE_NAMES, "all"):
        raise DomainError(f"unknown suite {args.suite!r}")
    if args.trials < 1:
        raise DomainError("--trials must be at least 1")
    dims = _parse_int_list(args.dims, "dims")
    if not dims or any(not 2 <= d <= 8 for d in dims):
        raise DomainError(f"--dims {args.dims!r} must list integers in [2, 8]")
    report = run_verification(
        suite=args.suite,
        trials=args.trials,
        seed=args.seed,
        dims=dims,
        quad=quad,
        inject_counterexample=args.inject_counterexample,
    )
    print(json.dumps(report_to_dict(report), indent=2, sort_keys=True))
    print(f"wall time: {report.wall_time_s:.2f}s", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monometric",
        description="Monotone metrics on density matrices: evaluators and checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval-f", help="evaluate an operator monotone function")
    p.add_argument("--family", choices=["gamma"], help="closed-form family")
    p.add_argument("--gamma", type=float, help="family parameter in [0,1]")
    p.add_argument("--h-file", help="weight JSON for the canonical form")
    p.add_argument("--beta", default="auto", help="shift, or 'auto' to normalize f(1)=1")
    p.add_argument("--t", type=float, required=True, help="argument t > 0")
    p.set_defaults(run=cmd_eval_f)

    p = sub.add_parser("eval-c", help="evaluate a metric kernel c(x, y)")
    p.add_argument("--bridge", type=float, help="closed-form family parameter")
    p.add_argument("--h-file", help="weight JSON for the canonical form")
    p.add_argument("--c0", default="auto", help="scale, or 'auto' for c(1,1)=1")
    p.add_argument("--from-f", help="function-spec JSON; uses c = 1/(y f(x/y))")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--y", type=float, required=True)
    p.set_defaults(run=cmd_eval_c)

    p = sub.add_parser("metric", help="evaluate the metric form at a state")
    p.add_argument("--rho", required=True, help="density matrix JSON file")
    p.add_argument("--a", required=True, help="first tangent JSON file")
    p.add_argument("--b", help="second tangent; omitted means B = A")
    p.add_argument("--c-spec", required=True, help="kernel spec JSON file")
    p.add_argument("--big-c", type=float, default=1.0, help="diagonal constant")
    p.set_defaults(run=cmd_metric)

    p = sub.add_parser("bridge-table", help="emit closed-form kernel values as CSV")
    p.add_argument("--gammas", required=True, help="comma list of parameters")
    p.add_argument("--x-grid", required=True, help="'a,b,c' or log:LO:HI:N or lin:LO:HI:N")
    p.add_argument("--y-grid", required=True, help="same format as --x-grid")
    p.set_defaults(run=cmd_bridge_table)

    p = sub.add_parser("verify", help="run property suites, JSON report to stdout")
    p.add_argument("--suite", default="all", help="monotone|chentsov|metric|channels|all")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dims", default="2,3", help="comma list of dimensions in [2,8]")
    p.add_argument(
        "--inject-counterexample",
        action="store_true",
        help=argparse.SUPPRESS,
    )
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        quad = _quad_from_env()
        return args.run(args, quad)
    except QuadratureFailure as exc:
        print(f"error: quadrature failed: {exc}", file=sys.stderr)
        return EXIT_QUADRATURE
    except NotAState as exc:
        print(f"error: not a valid state: {exc}", file=sys.stderr)
        return EXIT_NOT_A_STATE
    except MonometricError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
