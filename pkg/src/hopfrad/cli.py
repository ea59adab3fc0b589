"""Command-line front end.

Subcommands: ``validate`` (axiom checks on a definition file), ``radical``
(one radical or the full comparison report), ``oracle`` (brute-force
enumeration cross-checks over a finite field), ``regress`` (theorem checks
across a fixture directory).

Exit codes: 0 success, 2 validation failure, 3 parse failure, 4 enumeration
cap exceeded, 5 internal contradiction between independent computations.
Reports are byte-identical for identical input, seed and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import lcm

from .action import validate_action
from .algebra import normalized_integral, validate_algebra, validate_hopf
from .fields import FieldSpec
from .fixtures import Fixture
from .ideals import DEFAULT_SEED, enumerate_h_ideals, nilpotency_index
from .linalg import DEFAULT_ENUM_CAP, Subspace, full_subspace, intersect
from .radicals import (
    TheoremViolation,
    Unsupported,
    brown_mccoy_by_enumeration,
    comparison_report,
    fisher_radical,
    gt_radical,
    h_baer_radical,
    h_brown_mccoy_radical,
    h_jacobson_radical,
    h_locally_nilpotent_radical,
)
from .schema import ParseError, load_fixture

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3
EXIT_CAP = 4
EXIT_CONTRADICTION = 5


def subspace_rows(space: Subspace) -> list:
    """RREF basis rows as integer lists, denominators cleared row by row."""
    rows = []
    for v in space.basis:
        if space.field.is_rational:
            d = lcm(*(x.denominator for x in v)) if v else 1
            rows.append([int(x * d) for x in v])
        else:
            rows.append([int(x) for x in v])
    return rows


def _report_skeleton(args, command: str) -> dict:
    return {
        "command": command,
        "input": getattr(args, "path", getattr(args, "fixture_dir", None)),
        "seed": args.seed,
        "cap": args.cap,
        "checks": {},
    }


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
        return
    print(f"# {report['command']} {report.get('input')}  seed={report['seed']}")
    for key in sorted(report["checks"]):
        print(f"{key}: {report['checks'][key]}")
    for key in sorted(report):
        if key in ("command", "input", "seed", "cap", "checks"):
            continue
        print(f"{key}: {json.dumps(report[key], sort_keys=True)}")


def _load(path: str) -> Fixture:
    if not os.path.exists(path):
        raise ParseError(f"{path}: no such file")
    return load_fixture(path)


def cmd_validate(args) -> int:
    fx = _load(args.path)
    level = args.check_level or fx.expected_level
    report = _report_skeleton(args, "validate")
    report["fixture"] = fx.name
    report["level"] = level
    failures = []
    for label, rep in (
        ("algebra", validate_algebra(fx.M.R)),
        ("hopf", validate_hopf(fx.M.H)),
        ("action", validate_action(fx.M, level=level)),
    ):
        report["checks"][label] = "pass" if rep.ok else "fail"
        failures.extend(f"{label}: {msg}" for msg in rep.failures)
    if failures:
        report["failures"] = failures
    _emit(report, args.format)
    return EXIT_OK if not failures else EXIT_VALIDATION


_RADICALS = {
    "baer": lambda M, cap, seed: h_baer_radical(M, cap),
    "jacobson": lambda M, cap, seed: h_jacobson_radical(M, cap),
    "brownmccoy": lambda M, cap, seed: h_brown_mccoy_radical(M, cap, seed),
    "locnil": lambda M, cap, seed: h_locally_nilpotent_radical(M, cap),
}


def _run_one_radical(M, which: str, cap: int, seed: int):
    if which in _RADICALS:
        return _RADICALS[which](M, cap, seed)
    if which == "gt":
        t = normalized_integral(M.H)
        if t is None:
            raise Unsupported("no normalized left integral")
        return gt_radical(M, t, cap)
    if which.startswith("fisher:"):
        return fisher_radical(M, which.split(":", 1)[1], cap)
    raise ParseError(f"unknown radical {which!r}")


def cmd_radical(args) -> int:
    fx = _load(args.path)
    report = _report_skeleton(args, "radical")
    report["fixture"] = fx.name
    report["which"] = args.which
    if args.which == "all":
        raw = comparison_report(fx.M, cap=args.cap, seed=args.seed)
        entries = {}
        for name, entry in raw["entries"].items():
            if entry["status"] == "ok":
                entries[name] = {
                    "status": "ok",
                    "basis": subspace_rows(entry["space"]),
                    "method": entry["method"],
                }
            else:
                entries[name] = {"status": "unsupported", "reason": entry["reason"]}
        report["radicals"] = entries
        report["containments"] = raw["containments"]
        report["checks"] = raw["checks"]
        report["h_semiprime"] = raw["h_semiprime"]
    else:
        try:
            res = _run_one_radical(fx.M, args.which, args.cap, args.seed)
            report["radicals"] = {
                res.name: {
                    "status": "ok",
                    "basis": subspace_rows(res.space),
                    "method": res.method,
                    "witnesses": res.certificates,
                }
            }
            report["checks"][args.which] = "pass"
        except Unsupported as exc:
            report["radicals"] = {args.which: {"status": "unsupported", "reason": str(exc)}}
            report["checks"][args.which] = "unsupported"
    _emit(report, args.format)
    if any(v == "fail" for v in report["checks"].values()):
        return EXIT_CONTRADICTION
    return EXIT_OK


def cmd_oracle(args) -> int:
    fx = _load(args.path)
    M = fx.M
    F = M.field
    report = _report_skeleton(args, "oracle")
    report["fixture"] = fx.name
    if not F.is_prime_field or F.p**M.R.dim > args.cap:
        raise Unsupported(f"enumeration oracle needs a prime field within cap {args.cap}")
    ideals = enumerate_h_ideals(M, cap=args.cap)
    report["h_ideal_count"] = len(ideals)
    report["h_ideals"] = [subspace_rows(I) for I in ideals]

    # brute-force recomputations, diffed against the fast paths
    diffs = {}

    def diff(name, fast: Subspace, brute: Subspace):
        same = fast == brute
        report["checks"][f"{name}_matches_enumeration"] = "pass" if same else "fail"
        if not same:
            diffs[name] = {
                "fast": subspace_rows(fast),
                "enumeration": subspace_rows(brute),
            }

    baer_fast = h_baer_radical(M, args.cap, cross_check=False).space
    inter = full_subspace(F, M.R.dim)
    from .action import quotient_action
    from .radicals import _is_h_semiprime_by_enumeration

    for I in ideals:
        if _is_h_semiprime_by_enumeration(quotient_action(M, I), args.cap):
            inter = intersect(inter, I)
    diff("baer", baer_fast, inter)

    bm_fast = h_brown_mccoy_radical(M, args.cap, args.seed).space
    diff("brownmccoy", bm_fast, brown_mccoy_by_enumeration(M, args.cap))

    locnil_fast = h_locally_nilpotent_radical(M, args.cap).space
    # largest nilpotent H-ideal, straight off the list
    big = None
    for I in ideals:
        nil, _ = nilpotency_index(M, I)
        if nil and (big is None or big.dim < I.dim):
            big = I
    diff("locnil", locnil_fast, big)

    t = normalized_integral(M.H)
    if t is not None:
        gt_fast = gt_radical(M, t, args.cap).space
        report["checks"]["gt_equals_brownmccoy"] = (
            "pass" if gt_fast == bm_fast else "fail"
        )
    else:
        report["checks"]["gt_equals_brownmccoy"] = "unsupported"

    if diffs:
        report["diffs"] = diffs
    _emit(report, args.format)
    if any(v == "fail" for v in report["checks"].values()):
        return EXIT_CONTRADICTION
    return EXIT_OK


def cmd_regress(args) -> int:
    report = _report_skeleton(args, "regress")
    paths = sorted(
        os.path.join(args.fixture_dir, f)
        for f in os.listdir(args.fixture_dir)
        if f.endswith(".json")
    )
    if not paths:
        report["warning"] = "no fixture files found"
        _emit(report, args.format)
        return EXIT_OK
    failed = False
    for path in paths:
        fx = _load(path)
        prefix = fx.name
        rep = validate_action(fx.M, level=fx.expected_level)
        report["checks"][f"{prefix}/validates"] = "pass" if rep.ok else "fail"
        if not rep.ok:
            failed = True
            continue
        raw = comparison_report(fx.M, cap=args.cap, seed=args.seed)
        for key, status in raw["checks"].items():
            report["checks"][f"{prefix}/{key}"] = status
            if status == "fail":
                failed = True
    _emit(report, args.format)
    return EXIT_CONTRADICTION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfrad",
        description="Exact radicals of finite-dimensional Hopf module algebras.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                        help="enumeration bound on field-point counts")
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate", parents=[common],
                       help="axiom checks on a definition file")
    p.add_argument("path")
    p.add_argument("--check-level", choices=("weak", "module", "unital"), default=None)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("radical", parents=[common], help="compute one radical or the full report")
    p.add_argument("path")
    p.add_argument(
        "which",
        help="baer | jacobson | brownmccoy | gt | locnil | fisher:<base> | all",
    )
    p.set_defaults(fn=cmd_radical)

    p = sub.add_parser("oracle", parents=[common], help="brute-force enumeration cross-checks")
    p.add_argument("path")
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("regress", parents=[common], help="theorem checks across a fixture directory")
    p.add_argument("fixture_dir")
    p.set_defaults(fn=cmd_regress)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except TheoremViolation as exc:
        print(f"internal contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except Unsupported as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_CAP if "cap" in str(exc) else EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
