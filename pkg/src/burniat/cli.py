"""Command-line front end. Every command prints one JSON report.

Exit codes: 0 ok, 2 input error, 3 degenerate configuration, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from fractions import Fraction

from . import branch, cohomology, curves, invariants, plane
from .errors import BurniatError, DegenerateConfigError, InputError
from .lattice import DivisorClass, SurfaceLattice
from .serialize import dumps, frac_from_json

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DEGENERATE = 3
EXIT_VERIFY = 4


class VerificationFailure(Exception):
    def __init__(self, message: str, results: dict) -> None:
        super().__init__(message)
        self.results = results


def parse_class(spec: str, r: int) -> DivisorClass:
    """``"a,b1,...,br"`` for ``a L - sum b_j E_j``; missing trailing ``b_j`` are zero."""
    try:
        nums = [int(x) for x in spec.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"bad class spec {spec!r}: expected comma-separated integers") from None
    if not nums:
        raise InputError("empty class spec")
    return SurfaceLattice(r).cls(nums[0], *nums[1:])


def parse_rationals(spec: str) -> tuple[Fraction, ...]:
    return tuple(frac_from_json(x.strip()) for x in spec.split(",") if x.strip())


# -- commands -------------------------------------------------------------------------


def cmd_enumerate_lines(args: argparse.Namespace) -> dict:
    SurfaceLattice(args.r)
    minus2 = [parse_class(s, args.r) for s in args.minus2 or ()]
    lines = curves.lines_on_weak_dp(args.r, minus2)
    results = {
        "lines": [c.to_json() for c in lines],
        "count": len(lines),
        "max_line_count": curves.max_line_count(args.r),
        "minus1_classes": len(curves.enumerate_minus1_classes(args.r)),
    }
    if minus2:
        results["lost"] = [c.to_json() for c in curves.lost_lines(args.r, minus2)]
    return results


def _load_config(path: str) -> plane.BurniatConfig:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise InputError("configuration must be a JSON object")
    return plane.BurniatConfig.from_json(obj)


def cmd_classify(args: argparse.Namespace) -> dict:
    return plane.classify(_load_config(args.config)).to_json()


def cmd_branch_data(args: argparse.Namespace) -> dict:
    bd = branch.branch_table(args.case)
    if args.inject_error:
        # negative control: drop E_{i+2} from D_1
        bd = bd.with_component((1, "E"), bd.lattice.zero)
    census = branch.branch_census(bd)
    results: dict = {
        "table": bd.to_json(),
        "census": {
            "lines": census.lines,
            "conics": census.conics,
            "contracted": census.contracted,
            "sum_D_squared": census.sum_D_squared,
            "sum_anticanonical_degree": census.sum_anticanonical_degree,
        },
    }
    if args.verify or args.inject_error:
        checks = branch.verify_branch_identities(bd)
        results["identities"] = [c.to_json() for c in checks]
        results["all_pass"] = all(c.passed for c in checks)
        if not args.inject_error:
            results["natural_deformations_galois"] = branch.natural_deformations_galois(bd)
        if not results["all_pass"]:
            failed = sum(not c.passed for c in checks)
            raise VerificationFailure(f"{failed} identity checks failed", results)
    return results


def cmd_cohomology_table(args: argparse.Namespace) -> dict:
    if args.case not in plane.CASES:
        raise InputError(f"case {args.case} is out of scope; supported: {', '.join(plane.CASES)}")
    table = cohomology.eigenspace_table(plane.sample_config(args.case))
    results = table.to_json()
    results["text"] = table.to_text()
    results["csv"] = table.to_csv()
    return results


def cmd_verify_invariants(args: argparse.Namespace) -> dict:
    if args.case not in ("K5", "K6"):
        raise InputError(f"case must be K5 or K6, got {args.case}")
    reports = invariants.verify_invariants(args.case, args.trials, args.seed)
    results = {"identities": [r.to_json() for r in reports],
               "failures": sum(r.failures for r in reports)}
    if results["failures"]:
        raise VerificationFailure(f"{results['failures']} identity failures", results)
    return results


def cmd_make_config(args: argparse.Namespace) -> dict:
    kwargs = {}
    for name in ("a", "b", "p4", "p5"):
        spec = getattr(args, name)
        if spec is not None:
            kwargs[name] = parse_rationals(spec)
    if not kwargs and args.case in plane.SAMPLE_PARAMS:
        kwargs = dict(plane.SAMPLE_PARAMS[args.case])
    return plane.build_burniat_lines(args.case, **kwargs).to_json()


# -- plumbing -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="burniat", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--out", help="write the report to this file instead of stdout")
        return p

    p = add("enumerate-lines", cmd_enumerate_lines, "lines on a (weak) Del Pezzo surface")
    p.add_argument("--r", type=int, required=True, help="number of blown-up points, 0..8")
    p.add_argument("--minus2", action="append", metavar="a,b1,...,br",
                   help="effective (-2)-class; repeatable")

    p = add("classify", cmd_classify, "classify a nine-line configuration file")
    p.add_argument("config")

    p = add("branch-data", cmd_branch_data, "branch classes and identity report")
    p.add_argument("--case", required=True, choices=plane.CASES)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--inject-error", action="store_true", help="tamper with the table (negative control)")

    p = add("cohomology-table", cmd_cohomology_table, "eigenspace dimensions of H^1, H^2 of the tangent sheaf")
    p.add_argument("--case", required=True)
    p.add_argument("--format", choices=("json", "text", "csv"), default="json")

    p = add("verify-invariants", cmd_verify_invariants, "randomised checks of the invariant generators")
    p.add_argument("--case", required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=lambda s: int(s, 0), default=invariants.DEFAULT_SEED)

    p = add("make-config", cmd_make_config, "write a configuration file for a case")
    p.add_argument("--case", required=True, choices=plane.CASES)
    for name in ("a", "b", "p4", "p5"):
        p.add_argument(f"--{name}", help="comma-separated rationals, e.g. 1,2/3,5")
    return parser


def _inputs(args: argparse.Namespace) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in ("func", "command", "out")}


def run(argv: Sequence[str] | None = None) -> tuple[int, str, str | None]:
    """Parse ``argv``, run the command and return ``(exit_code, rendered, out_path)``."""
    args = build_parser().parse_args(argv)
    report: dict = {"command": args.command, "inputs": _inputs(args)}
    code = EXIT_OK
    try:
        report["results"] = args.func(args)
        report["status"] = "ok"
    except VerificationFailure as exc:
        code, report["results"] = EXIT_VERIFY, exc.results
        report["status"] = {"error": code, "message": str(exc)}
    except DegenerateConfigError as exc:
        code = EXIT_DEGENERATE
        report["results"] = None
        report["status"] = {"error": code, "message": str(exc)}
    except BurniatError as exc:
        code = EXIT_INPUT
        report["results"] = None
        report["status"] = {"error": code, "message": str(exc)}

    fmt = getattr(args, "format", "json")
    if code == EXIT_OK and fmt == "text":
        rendered = report["results"]["text"]
    elif code == EXIT_OK and fmt == "csv":
        rendered = report["results"]["csv"]
    elif code == EXIT_OK and args.command == "make-config":
        # bare configuration so the file can be fed straight to ``classify``
        rendered = dumps(report["results"])
    else:
        rendered = dumps(report)
    return code, rendered, args.out


def main(argv: Sequence[str] | None = None) -> int:
    code, rendered, out = run(argv)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    if code != EXIT_OK:
        print(f"burniat: error {code}: {json.loads(rendered)['status']['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
