"""Command-line front end.

Subcommands: bound, minimize, oracle, classify, catalog, mld, screen,
reproduce.  Output formats: pretty (default), json (schema "nvol/1"),
tsv.  Exit codes: 0 success, 1 computation error (e.g. no valid weight,
or a failing reproduction claim), 2 validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from . import __version__
from .catalog import (
    catalog_volume,
    classify_volume_ge_9,
    describe,
    entry_to_json_dict,
    mld_of,
    parse_descriptor,
    standard_entries,
)
from .errors import ComputationError, InputError
from .optimizer import OptimizerOptions, grid_search, minimize_bound
from .reproduce import run_claims
from .screener import screen_fano
from .support import PolySupport, infer_nvars, parse_polynomial
from .surd import SurdValue
from .valuation import WeightVector, nv_bound

SCHEMA = "nvol/1"


def _exact_str(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nvol",
        description="Monomial-valuation volume bounds, singularity catalog, K-moduli screening",
    )
    parser.add_argument("--version", action="version", version=f"nvol {__version__}")
    parser.add_argument(
        "--format", choices=("pretty", "json", "tsv"), default="pretty",
        help="output format (default: pretty)",
    )
    # Accepted after the subcommand as well; SUPPRESS keeps the root default
    # from being clobbered when the flag is absent there.
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format", choices=("pretty", "json", "tsv"), default=argparse.SUPPRESS,
        help="output format (default: pretty)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_poly_args(cmd: argparse.ArgumentParser) -> None:
        cmd.add_argument("--poly", help="polynomial expression in x1..xn")
        cmd.add_argument("--poly-file", type=Path, help="JSON support file")
        cmd.add_argument("--nvars", type=int, help="ambient variable count (default: inferred)")

    bound_cmd = sub.add_parser("bound", parents=[shared], help="evaluate the volume bound at one weight")
    add_poly_args(bound_cmd)
    bound_cmd.add_argument(
        "--weight", required=True,
        help="comma-separated weights; rationals stay exact, decimals go numeric",
    )
    bound_cmd.add_argument("--n", type=int, help="dimension exponent (default: nvars - 1)")

    minimize_cmd = sub.add_parser("minimize", parents=[shared], help="minimize the bound over positive weights")
    add_poly_args(minimize_cmd)
    minimize_cmd.add_argument("--grid-denominator", type=int, default=60)
    minimize_cmd.add_argument("--tol", type=float, default=1e-10)
    minimize_cmd.add_argument("--max-iters", type=int, default=5000)
    minimize_cmd.add_argument("--restarts", type=int, default=8)
    minimize_cmd.add_argument("--seed", type=int, default=0)

    oracle_cmd = sub.add_parser("oracle", parents=[shared], help="exact grid minimum of the bound")
    add_poly_args(oracle_cmd)
    oracle_cmd.add_argument("--denominator", type=int, required=True)

    classify_cmd = sub.add_parser("classify", parents=[shared], help="decide local volume >= 9")
    classify_cmd.add_argument("--descriptor", required=True)

    catalog_cmd = sub.add_parser("catalog", parents=[shared], help="dump the singularity catalog")
    catalog_cmd.add_argument("--filter", help="substring filter on the descriptor")

    mld_cmd = sub.add_parser("mld", parents=[shared], help="minimal log discrepancy of a descriptor")
    mld_cmd.add_argument("--descriptor", required=True)

    screen_cmd = sub.add_parser("screen", parents=[shared], help="K-moduli screening by anticanonical volume")
    screen_cmd.add_argument("--volume", required=True, help="anticanonical volume (rational)")
    screen_cmd.add_argument("--smoothable", action="store_true")

    reproduce_cmd = sub.add_parser("reproduce", parents=[shared], help="re-derive every reference value")
    reproduce_cmd.add_argument("--section", help="restrict to one claim section")

    return parser


def _load_support(args: argparse.Namespace) -> PolySupport:
    if args.poly_file is not None and args.poly is not None:
        raise InputError("give either --poly or --poly-file, not both")
    if args.poly_file is not None:
        return PolySupport.from_json(args.poly_file.read_text())
    if args.poly is None:
        raise InputError("a polynomial is required (--poly or --poly-file)")
    nvars = args.nvars
    if nvars is None:
        weight_text = getattr(args, "weight", None)
        nvars = len(weight_text.split(",")) if weight_text else infer_nvars(args.poly)
    return parse_polynomial(args.poly, nvars)


def _threads() -> int:
    raw = os.environ.get("NVOL_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise InputError(f"NVOL_THREADS must be an integer, got {raw!r}")


def _emit(report: dict, fmt: str, table_key: str | None = None) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    if fmt == "tsv":
        if table_key is not None:
            rows = report[table_key]
            if rows:
                header = list(rows[0].keys())
                print("\t".join(header))
                for row in rows:
                    print("\t".join(_cell(row[h]) for h in header))
            return
        for key, value in report.items():
            if key == "schema":
                continue
            print(f"{key}\t{_cell(value)}")
        return
    # pretty
    if table_key is not None:
        for row in report[table_key]:
            print("  ".join(f"{k}={_cell(v)}" for k, v in row.items()))
        for key, value in report.items():
            if key not in (table_key, "schema"):
                print(f"{key}: {_cell(value)}")
        return
    for key, value in report.items():
        if key == "schema":
            continue
        print(f"{key}: {_cell(value)}")


def _cell(value) -> str:
    if isinstance(value, (list, tuple, dict)):
        return json.dumps(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    return str(value)


def _weight_report(w: WeightVector) -> list[str]:
    return [_exact_str(x) for x in w.entries]


def _cmd_bound(args: argparse.Namespace, fmt: str) -> int:
    weight = WeightVector.parse(args.weight)
    support = _load_support(args)
    evaluation = nv_bound(support, weight, args.n)
    report = {
        "schema": SCHEMA,
        "command": "bound",
        "poly": str(support),
        "weight": _weight_report(weight),
        "flavor": "exact" if weight.is_exact else "numeric",
        "n": args.n if args.n is not None else support.nvars - 1,
        "v": _exact_str(evaluation.v),
        "w_sum": _exact_str(evaluation.w_sum),
        "w_prod": _exact_str(evaluation.w_prod),
        "ld_factor": _exact_str(evaluation.ld_factor),
        "bound": _exact_str(evaluation.bound),
        "bound_numeric": float(evaluation.bound),
        "active": [list(a) for a in evaluation.active],
    }
    _emit(report, fmt)
    return 0


def _cmd_minimize(args: argparse.Namespace, fmt: str) -> int:
    support = _load_support(args)
    opts = OptimizerOptions(
        grid_denominator=args.grid_denominator,
        tol=args.tol,
        max_iters=args.max_iters,
        restarts=args.restarts,
        seed=args.seed,
    )
    result = minimize_bound(support, opts, threads=_threads())
    report = {
        "schema": SCHEMA,
        "command": "minimize",
        "poly": str(support),
        "value": result.value,
        "witness": list(result.witness.as_floats()),
        "active": [list(a) for a in result.active],
        "status": result.status.value,
        "oracle_value": _exact_str(result.oracle_value),
        "oracle_value_numeric": float(result.oracle_value),
        "grid_denominator": args.grid_denominator,
        "restarts": args.restarts,
        "seed": args.seed,
    }
    _emit(report, fmt)
    return 0


def _cmd_oracle(args: argparse.Namespace, fmt: str) -> int:
    support = _load_support(args)
    witness, value = grid_search(support, args.denominator)
    report = {
        "schema": SCHEMA,
        "command": "oracle",
        "poly": str(support),
        "denominator": args.denominator,
        "value": _exact_str(value),
        "value_numeric": float(value),
        "witness": _weight_report(witness),
    }
    _emit(report, fmt)
    return 0


def _cmd_classify(args: argparse.Namespace, fmt: str) -> int:
    descriptor = parse_descriptor(args.descriptor)
    result = classify_volume_ge_9(descriptor)
    report = {
        "schema": SCHEMA,
        "command": "classify",
        "descriptor": describe(descriptor),
        "ge9": result.ge9,
        "reason": result.reason,
    }
    _emit(report, fmt)
    return 0


def _cmd_catalog(args: argparse.Namespace, fmt: str) -> int:
    entries = [entry_to_json_dict(e) for e in standard_entries()]
    if args.filter:
        entries = [e for e in entries if args.filter in e["descriptor"]]
    report = {"schema": SCHEMA, "command": "catalog", "entries": entries}
    _emit(report, fmt, table_key="entries")
    return 0


def _cmd_mld(args: argparse.Namespace, fmt: str) -> int:
    descriptor = parse_descriptor(args.descriptor)
    value = mld_of(descriptor)
    report = {
        "schema": SCHEMA,
        "command": "mld",
        "descriptor": describe(descriptor),
        "mld": _exact_str(value),
        "mld_numeric": float(value),
    }
    _emit(report, fmt)
    return 0


def _cmd_screen(args: argparse.Namespace, fmt: str) -> int:
    try:
        volume = Fraction(args.volume)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad volume {args.volume!r}") from exc
    result = screen_fano(volume, smoothable=args.smoothable)
    report = {"schema": SCHEMA, "command": "screen", **result.to_json_dict()}
    _emit(report, fmt)
    return 0


def _cmd_reproduce(args: argparse.Namespace, fmt: str) -> int:
    results = run_claims(section=args.section)
    rows = [
        {
            "id": r.id,
            "section": r.section,
            "source": r.source,
            "expected": r.expected,
            "computed": r.computed,
            "abs_delta": r.delta,
            "tolerance": r.tolerance if r.tolerance is not None else "exact",
            "pass": r.passed,
        }
        for r in results
    ]
    overall = all(r.passed for r in results)
    report = {
        "schema": SCHEMA,
        "command": "reproduce",
        "claims": rows,
        "total": len(rows),
        "passed": sum(r.passed for r in results),
        "overall": "pass" if overall else "fail",
    }
    _emit(report, fmt, table_key="claims")
    return 0 if overall else 1


_DISPATCH = {
    "bound": _cmd_bound,
    "minimize": _cmd_minimize,
    "oracle": _cmd_oracle,
    "classify": _cmd_classify,
    "catalog": _cmd_catalog,
    "mld": _cmd_mld,
    "screen": _cmd_screen,
    "reproduce": _cmd_reproduce,
}


def run(argv: Sequence[str]) -> int:
    """Parse, dispatch, and map errors to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args, args.format)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
