"""Command-line front end.

Subcommands: `compute` evaluates one polynomial, `enumerate` prints a level,
`verify` runs identity sweeps.  All results go to standard out (and to
--out when given); diagnostics go to standard error.  Exit codes: 0 success,
1 at least one verification counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .gmodule import parse_element, schur_D, schur_U
from .identities import IDENTITY_NAMES, run_all, run_identity, weighted_complete
from .instances import INSTANCE_NAMES, SEQUENCES, get_instance

USAGE_ERROR = 2


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="schurops",
        description="Generalized Schur operators on graded lattices: compute, enumerate, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="also write the same bytes to this file")

    compute = sub.add_parser("compute", help="evaluate one polynomial")
    compute.add_argument("operation", choices=("schur-d", "schur-u", "hweighted"))
    compute.add_argument("--instance", choices=INSTANCE_NAMES)
    compute.add_argument("--element", help="basis element encoding, e.g. [2,1]")
    compute.add_argument("--target", help="pairing target encoding; defaults to the minimum")
    compute.add_argument("--a", choices=tuple(SEQUENCES), help="sequence name for hweighted")
    compute.add_argument("--i", type=int, default=0, help="index for hweighted")
    compute.add_argument("--vars", type=int, default=2)
    add_common(compute)

    enum = sub.add_parser("enumerate", help="print all basis elements of one rank")
    enum.add_argument("--instance", required=True, choices=INSTANCE_NAMES)
    enum.add_argument("--rank", type=int, required=True)
    add_common(enum)

    verify = sub.add_parser("verify", help="run identity verification sweeps")
    verify.add_argument("identity", choices=IDENTITY_NAMES + ("all",))
    verify.add_argument("--instance", required=True, choices=INSTANCE_NAMES)
    verify.add_argument("--rank-cap", type=int, default=4)
    verify.add_argument("--i-max", type=int, default=3)
    verify.add_argument("--j-max", type=int, default=None)
    verify.add_argument("--vars", type=int, default=2)
    verify.add_argument("--deg-cap", type=int, default=4)
    add_common(verify)

    return parser


def _emit(text, out_path):
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")


def _compact(obj):
    return json.dumps(obj, separators=(",", ":"))


def _cmd_compute(args):
    if args.operation == "hweighted":
        if args.a is None:
            raise ValueError("hweighted requires --a")
        if args.i < 0 or args.vars < 1:
            raise ValueError("hweighted requires --i >= 0 and --vars >= 1")
        poly = weighted_complete(SEQUENCES[args.a], args.i, args.vars)
    else:
        if args.instance is None or args.element is None:
            raise ValueError(f"{args.operation} requires --instance and --element")
        inst = get_instance(args.instance)
        element = parse_element(inst.kind, json.loads(args.element))
        if args.target is None:
            target = inst.minimum
        else:
            target = parse_element(inst.kind, json.loads(args.target))
        if args.vars < 1:
            raise ValueError("--vars must be at least 1")
        if args.operation == "schur-d":
            poly = schur_D(inst, element, target, args.vars)
        else:
            poly = schur_U(inst, target, element, args.vars)
    text = _compact(poly.to_json_dict()) if args.format == "json" else poly.text()
    _emit(text, args.out)
    return 0


def _cmd_enumerate(args):
    if args.rank < 0:
        raise ValueError("--rank must be nonnegative")
    inst = get_instance(args.instance)
    level = inst.level(args.rank)
    if args.format == "json":
        text = _compact([b.encode() for b in level])
    else:
        text = "\n".join(_compact(b.encode()) for b in level) if level else ""
    _emit(text, args.out)
    return 0


def _cmd_verify(args):
    inst = get_instance(args.instance)
    caps = {
        "rank_cap": args.rank_cap,
        "i_max": args.i_max,
        "j_max": args.j_max,
        "n_max": args.vars,
        "deg_cap": args.deg_cap,
    }
    if args.rank_cap < 0 or args.i_max < 0 or args.vars < 1 or args.deg_cap < 0:
        raise ValueError("caps must be nonnegative (and --vars at least 1)")
    if args.identity == "all":
        reports = run_all(inst, **caps)
    else:
        reports = [run_identity(args.identity, inst, **caps)]
    reports.sort(key=lambda r: (r.identity, r.instance))
    for report in reports:
        for ce in report.counterexamples:
            print(f"counterexample in {report.identity}: {ce['input']}", file=sys.stderr)
        if report.ranges.get("b_zero_at"):
            print(
                f"note: b_l = 0 at l in {report.ranges['b_zero_at']} for {report.instance}",
                file=sys.stderr,
            )
    if args.format == "json":
        text = _compact([r.to_json_dict() for r in reports])
    else:
        text = "\n".join(r.text() for r in reports)
    _emit(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        return _cmd_verify(args)
    except (ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        print(parser.format_usage().rstrip(), file=sys.stderr)
        return USAGE_ERROR


def console_entry():
    raise SystemExit(main())
