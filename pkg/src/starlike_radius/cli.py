"""Command-line front end.

Examples::

    starlike-radius radius --family t1 --target cardioid
    starlike-radius radius --family t1 --target halfplane --alpha 0.5
    starlike-radius radius --family t2 --target janowski --A 1 --B -0.5
    starlike-radius verify --suite all --seed 42
    starlike-radius bounds --family t2 --r 0.3
    starlike-radius table --format csv

Exit codes: 0 success, 1 verification failure, 2 invalid arguments.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from . import bounds, harness
from .analytic import FAMILY_KIND, DomainError, Family
from .radii import SOLVER_TOL, RadiusQuery, radius_report
from .regions import ParameterError, Region, RegionKind

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starlike-radius",
        description="Radii of starlikeness for the subordinate-ratio classes T1 and T2.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("radius", help="closed-form and numeric radius for one target region")
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--target", required=True, help="one of: " + ", ".join(k.value for k in RegionKind))
    p.add_argument("--alpha", type=float, default=None, help="order for halfplane/disc targets")
    p.add_argument("--A", dest="A", type=float, default=None, help="Janowski A (default 1)")
    p.add_argument("--B", dest="B", type=float, default=None, help="Janowski B (default -1)")
    p.add_argument("--tol", type=float, default=SOLVER_TOL, help="numeric solver tolerance")
    p.add_argument("--format", choices=["json", "text"], default="json")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=["all", "radii", "lemmas"], default="all")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=bounds.DEFAULT_SAMPLES, help="random factors/members per family")
    v.add_argument("--boundary-samples", type=int, default=bounds.DEFAULT_BOUNDARY_SAMPLES)
    v.add_argument("--radius-tol", type=float, default=harness.RADIUS_TOL)
    v.add_argument("--residual-tol", type=float, default=harness.RESIDUAL_TOL)
    v.add_argument("--dominance-slack", type=float, default=bounds.DOMINANCE_SLACK)

    b = sub.add_parser("bounds", help="member bound and growth range at a radius")
    b.add_argument("--family", required=True, choices=[f.value for f in Family])
    b.add_argument("--r", type=float, required=True)

    t = sub.add_parser("table", help="reproduction table for the catalog")
    t.add_argument("--format", choices=["json", "csv", "text"], default="json")
    return parser


def _region_from_args(args) -> Region:
    try:
        kind = RegionKind(args.target.lower())
    except ValueError:
        raise UsageError(f"unknown region {args.target!r}") from None
    if kind in (RegionKind.HALFPLANE, RegionKind.DISC):
        if args.A is not None or args.B is not None:
            raise UsageError(f"--A/--B do not apply to {kind.value}")
        return Region(kind, alpha=0.0 if args.alpha is None else args.alpha)
    if kind is RegionKind.JANOWSKI:
        if args.alpha is not None:
            raise UsageError("--alpha does not apply to janowski")
        return Region.janowski(1.0 if args.A is None else args.A, -1.0 if args.B is None else args.B)
    if args.alpha is not None or args.A is not None or args.B is not None:
        raise UsageError(f"{kind.value} takes no parameters")
    return Region(kind)


def _cmd_radius(args, out) -> int:
    if not args.tol > 0:
        raise UsageError("tol must be positive")
    report = radius_report(RadiusQuery(Family(args.family), _region_from_args(args)), tol=args.tol)
    data = report.to_dict()
    if args.format == "json":
        out.write(json.dumps(data, indent=2) + "\n")
    else:
        for key, value in data.items():
            out.write(f"{key}: {value}\n")
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    config = harness.VerificationConfig(
        seed=args.seed,
        samples_per_family=args.samples,
        boundary_samples=args.boundary_samples,
        radius_tol=args.radius_tol,
        residual_tol=args.residual_tol,
        dominance_slack=args.dominance_slack,
    )
    workers = harness.thread_cap()
    runner = {"all": harness.verify_all, "radii": harness.verify_radii, "lemmas": harness.verify_lemmas}[args.suite]
    report = runner(config, workers)
    out.write(report.to_json() + "\n")
    for suite in report.suites:
        if not suite.passed:
            logging.getLogger(__name__).error("suite %s failed: %s", suite.name, json.dumps(suite.witness))
    return EXIT_OK if report.overall else EXIT_FAIL


def _cmd_bounds(args, out) -> int:
    family = Family(args.family)
    kind = FAMILY_KIND[family]
    r = args.r
    factor_range = bounds.factor_modulus_range(kind, r)
    growth = bounds.member_growth_range(family, r)
    data = {
        "family": family.value,
        "r": r,
        "member_bound": bounds.member_bound(family, r),
        "factor_bound": bounds.factor_bound(kind, r),
        "factor_modulus_range": [factor_range.lo, factor_range.hi],
        "growth_range": [growth.lo, growth.hi],
    }
    out.write(json.dumps(data, indent=2) + "\n")
    return EXIT_OK


def _cmd_table(args, out) -> int:
    out.write(harness.emit_table(args.format))
    return EXIT_OK


_COMMANDS = {"radius": _cmd_radius, "verify": _cmd_verify, "bounds": _cmd_bounds, "table": _cmd_table}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    """Execute one command; returns the process exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return _COMMANDS[args.verb](args, out)
    except (UsageError, ParameterError, DomainError, ValueError) as exc:
        err.write(f"starlike-radius {args.verb}: error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    sys.exit(run())


if __name__ == "__main__":
    main()
