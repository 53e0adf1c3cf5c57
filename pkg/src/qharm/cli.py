"""Command-line front door.

Subcommands map one-to-one onto library operations: qint, dq, salagean,
transform, check, extremal, combine, witness, growth, verify, probe, scan.
Results go to stdout as JSON unless --out (file) or --csv (grid dump) is
given.

Exit codes: 0 all checks passed / operation succeeded; 1 a verification
check failed (valid run, negative result); 2 usage or parse error,
including malformed series JSON (the diagnostic names the offending
field).  The environment variable QHARM_TOL overrides the default check
tolerance of 1e-9; an unparseable value is a usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .qcore import QParam
from .classes import (
    ClassParams,
    coeff_functional,
    convex_combination,
    extreme_point,
    growth_bounds,
    member_t_iff,
    satisfies_sufficient,
    sharpness_witness,
)
from .qcore import q_integer, q_integer_pow
from .salagean import OperatorParams, class_transform, q_derivative, salagean_harmonic
from .series import SchemaError, harmonic_from_json, harmonic_to_json
from .verify import (
    DEFAULT_TOLERANCE,
    DiskGrid,
    counterexample_scan,
    growth_bound_check,
    injectivity_sample_check,
    necessity_probe,
    re_condition_margin,
    sense_preserving_margin,
    write_margin_csv,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


def _tolerance() -> float:
    raw = os.environ.get("QHARM_TOL")
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        val = float(raw)
    except ValueError:
        raise UsageError(f"QHARM_TOL: not a real number: {raw!r}") from None
    if not (math.isfinite(val) and val >= 0.0):
        raise UsageError(f"QHARM_TOL: must be a finite non-negative real, got {raw!r}")
    return val


def _load_harmonic(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: malformed JSON: {exc}") from None
    return harmonic_from_json(obj)


def _emit(payload, out: str | None) -> None:
    text = json.dumps(payload, indent=2)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _power_series_json(series) -> dict:
    return {"start_power": 0, "coeffs": [[c.real, c.imag] for c in series.coeffs]}


def _grid_from_args(args) -> DiskGrid:
    kwargs = {}
    if args.radii is not None:
        try:
            kwargs["radii"] = tuple(float(r) for r in args.radii.split(","))
        except ValueError:
            raise UsageError(f"--radii: expected comma-separated reals, got {args.radii!r}") from None
    if args.angles is not None:
        kwargs["angular_count"] = args.angles
    if args.no_axis:
        kwargs["include_positive_axis"] = False
    return DiskGrid(**kwargs)


def _class_params(args) -> ClassParams:
    return ClassParams(m=args.m, alpha=args.alpha, q=QParam(args.q))


def _parse_indexed(values: list[str] | None, lowest: int, flag: str) -> dict[int, complex]:
    out: dict[int, complex] = {}
    for item in values or []:
        try:
            key, _, val = item.partition("=")
            u = int(key)
            c = complex(val)
        except ValueError:
            raise UsageError(f"{flag}: expected U=COMPLEX, got {item!r}") from None
        if u < lowest:
            raise UsageError(f"{flag}: power must be >= {lowest}, got {u}")
        out[u] = out.get(u, 0j) + c
    return out


# --- subcommand handlers ------------------------------------------------------


def _cmd_qint(args, tol: float) -> int:
    q = QParam(args.q)
    value = q_integer(args.u, q) if args.m is None else q_integer_pow(args.u, q, args.m)
    print(repr(value))
    return EXIT_OK


def _cmd_dq(args, tol: float) -> int:
    f = _load_harmonic(getattr(args, "in"))
    q = QParam(args.q)
    _emit(
        {"h": _power_series_json(q_derivative(f.h, q)), "g": _power_series_json(q_derivative(f.g, q))},
        args.out,
    )
    return EXIT_OK


def _cmd_salagean(args, tol: float) -> int:
    f = _load_harmonic(getattr(args, "in"))
    p = OperatorParams(args.m, QParam(args.q), classical_mode=args.classical)
    _emit(harmonic_to_json(salagean_harmonic(f, p)), args.out)
    return EXIT_OK


def _cmd_transform(args, tol: float) -> int:
    f = _load_harmonic(getattr(args, "in"))
    p = OperatorParams(args.m, QParam(args.q), classical_mode=args.classical)
    _emit(_power_series_json(class_transform(f, p)), args.out)
    return EXIT_OK


def _cmd_check(args, tol: float) -> int:
    f = _load_harmonic(getattr(args, "in"))
    p = _class_params(args)
    functional = coeff_functional(f, p)
    sufficient = satisfies_sufficient(f, p)
    t_member = member_t_iff(f, p) if f.t_form else None
    _emit(
        {"functional": functional, "sufficient": sufficient, "t_form": f.t_form, "t_member": t_member},
        args.out,
    )
    verdict = t_member if f.t_form else sufficient
    return EXIT_OK if verdict else EXIT_CHECK_FAILED


def _cmd_extremal(args, tol: float) -> int:
    p = _class_params(args)
    sign = 1 if args.positive_coanalytic else -1
    f = extreme_point(args.u, args.kind, p, coanalytic_sign=sign)
    _emit(harmonic_to_json(f), args.out)
    return EXIT_OK


def _cmd_combine(args, tol: float) -> int:
    p = _class_params(args)
    terms = []
    for item in args.point:
        parts = item.split(":")
        if len(parts) != 3:
            raise UsageError(f"--point: expected U:KIND:WEIGHT, got {item!r}")
        try:
            terms.append((int(parts[0]), parts[1], float(parts[2])))
        except ValueError:
            raise UsageError(f"--point: expected U:KIND:WEIGHT, got {item!r}") from None
    _emit(harmonic_to_json(convex_combination(terms, p)), args.out)
    return EXIT_OK


def _cmd_witness(args, tol: float) -> int:
    p = _class_params(args)
    x_map = _parse_indexed(args.x, 2, "--x")
    y_map = _parse_indexed(args.y, 1, "--y")
    max_x = max(x_map, default=1)
    max_y = max(y_map, default=0)
    xs = [x_map.get(u, 0j) for u in range(2, max_x + 1)]
    ys = [y_map.get(u, 0j) for u in range(1, max_y + 1)]
    _emit(harmonic_to_json(sharpness_witness(xs, ys, p)), args.out)
    return EXIT_OK


def _cmd_growth(args, tol: float) -> int:
    p = _class_params(args)
    b = growth_bounds(args.b1, args.r, p)
    _emit({"lower": b.lower, "upper": b.upper, "radius": b.radius}, args.out)
    return EXIT_OK


def _cmd_verify(args, tol: float) -> int:
    f = _load_harmonic(getattr(args, "in"))
    p = _class_params(args)
    grid = _grid_from_args(args)
    reports = [
        re_condition_margin(f, p, grid, tolerance=tol),
        sense_preserving_margin(f, grid, tolerance=tol),
        injectivity_sample_check(f, grid, args.pair_budget, seed=args.seed, tolerance=tol),
    ]
    if f.t_form and member_t_iff(f, p):
        reports.append(growth_bound_check(f, p, grid, tolerance=tol))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            write_margin_csv(fh, f, p, grid)
    _emit([r.to_dict() for r in reports], args.out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _cmd_probe(args, tol: float) -> int:
    f = _load_harmonic(getattr(args, "in"))
    p = _class_params(args)
    rs = None
    if args.radii is not None:
        try:
            rs = tuple(float(r) for r in args.radii.split(","))
        except ValueError:
            raise UsageError(f"--radii: expected comma-separated reals, got {args.radii!r}") from None
    report = necessity_probe(f, p, rs)
    _emit(report.to_dict(), args.out)
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _cmd_scan(args, tol: float) -> int:
    p = _class_params(args)
    report = counterexample_scan(p, args.trials, args.seed, pair_budget=args.pair_budget, tolerance=tol)
    _emit(report.to_dict(), args.out)
    return EXIT_OK


# --- parser -------------------------------------------------------------------


def _add_class_flags(sub) -> None:
    sub.add_argument("--m", type=int, required=True, help="operator order m >= 0")
    sub.add_argument("--alpha", type=float, required=True, help="level alpha in [0, 1)")
    sub.add_argument("--q", type=float, required=True, help="deformation q in (0, 1)")


def _add_out_flag(sub) -> None:
    sub.add_argument("--out", help="write the JSON result to this path instead of stdout")


def _add_grid_flags(sub) -> None:
    sub.add_argument("--grid", choices=["default"], default="default", help="named grid preset")
    sub.add_argument("--radii", help="comma-separated override of the grid radii")
    sub.add_argument("--angles", type=int, help="override of the angular sample count")
    sub.add_argument("--no-axis", action="store_true", help="offset angles off the positive real axis")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qharm",
        description="Salagean q-operator toolkit for harmonic mappings on the unit disc.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    s = subs.add_parser("qint", help="evaluate the q-analogue of an integer")
    s.add_argument("--u", type=int, required=True)
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--m", type=int, help="optional power: print [u]_q**m")
    s.set_defaults(handler=_cmd_qint)

    s = subs.add_parser("dq", help="apply the Jackson q-derivative to both parts")
    s.add_argument("--in", required=True, help="input series JSON")
    s.add_argument("--q", type=float, required=True)
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_dq)

    s = subs.add_parser("salagean", help="apply the order-m Salagean q-operator to the pair")
    s.add_argument("--in", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--classical", action="store_true", help="use undeformed weights u**m")
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_salagean)

    s = subs.add_parser("transform", help="emit the membership transform series")
    s.add_argument("--in", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--q", type=float, required=True)
    s.add_argument("--classical", action="store_true")
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_transform)

    s = subs.add_parser("check", help="coefficient functional and membership verdicts")
    s.add_argument("--in", required=True)
    _add_class_flags(s)
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_check)

    s = subs.add_parser("extremal", help="construct a one-term boundary function")
    s.add_argument("--u", type=int, required=True)
    s.add_argument("--kind", choices=["analytic", "coanalytic"], required=True)
    s.add_argument(
        "--positive-coanalytic",
        action="store_true",
        help="store the co-analytic coefficient with the sign-normalized (+) convention",
    )
    _add_class_flags(s)
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_extremal)

    s = subs.add_parser("combine", help="convex combination of boundary functions")
    s.add_argument("--point", action="append", required=True, metavar="U:KIND:WEIGHT")
    _add_class_flags(s)
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_combine)

    s = subs.add_parser("witness", help="equality witness for the coefficient bound")
    s.add_argument("--x", action="append", metavar="U=COMPLEX", help="analytic weight (power >= 2)")
    s.add_argument("--y", action="append", metavar="U=COMPLEX", help="co-analytic weight (power >= 1)")
    _add_class_flags(s)
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_witness)

    s = subs.add_parser("growth", help="two-sided growth bound at a radius")
    s.add_argument("--b1", type=float, required=True)
    s.add_argument("--r", type=float, required=True)
    _add_class_flags(s)
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_growth)

    s = subs.add_parser("verify", help="run the disc-sampled checks on a function")
    s.add_argument("--in", required=True)
    _add_class_flags(s)
    _add_grid_flags(s)
    s.add_argument("--pair-budget", type=int, default=256, help="injectivity pair samples")
    s.add_argument("--seed", type=int, default=0, help="seed for injectivity pair selection")
    s.add_argument("--csv", help="write the per-point margin table to this path")
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_verify)

    s = subs.add_parser("probe", help="positive-real-axis necessity probe (t_form input)")
    s.add_argument("--in", required=True)
    _add_class_flags(s)
    s.add_argument("--radii", help="comma-separated increasing radii approaching 1")
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_probe)

    s = subs.add_parser("scan", help="randomized sufficiency-gap and proof-step scan")
    _add_class_flags(s)
    s.add_argument("--trials", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--pair-budget", type=int, default=64)
    _add_out_flag(s)
    s.set_defaults(handler=_cmd_scan)

    return parser


def run(argv: list[str]) -> int:
    """Parse and execute; returns the process exit status instead of
    raising SystemExit, so it can be driven in-process."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        tol = _tolerance()
        return args.handler(args, tol)
    except SchemaError as exc:
        print(f"error: invalid series JSON: field {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
