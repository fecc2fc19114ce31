"""Command-line front end.

Exit status: 0 on success, 1 on a computation error (structured JSON on
stderr) or a verify run with violations, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .characters import character_table, format_partition
from .codes import embed, read_code
from .constructions import block_group, fpf_involution, two_subset_group
from .distinguish import dist_report
from .errors import WeakQFSError
from .groups import DEFAULT_CAP, format_group, minimal_degree, read_group, support_distribution
from .verify import SUITES, VerifyConfig, run_verify


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def cmd_chars(args) -> str:
    table = character_table(args.n)
    if args.format == "json":
        return _dump_json({
            "n": args.n,
            "partitions": [format_partition(p) for p in table.partitions],
            "table": [table.row(lam) for lam in table.partitions],
        })
    return table.to_csv()


def cmd_dh(args) -> str:
    G = read_group(args.group)
    report = dist_report(G, c=args.c, cap=args.cap, samples=args.samples, seed=args.seed)
    return _dump_json(report.to_json())


def cmd_mindeg(args) -> str:
    m = minimal_degree(read_group(args.group), args.cap)
    if args.format == "json":
        return _dump_json({"min_degree": m})
    return f"{m}\n"


def cmd_supportdist(args) -> str:
    dist = support_distribution(read_group(args.group), args.cap)
    if args.format == "json":
        return _dump_json({str(k): v for k, v in dist.items()})
    return "".join(f"{k},{v}\n" for k, v in dist.items())


def cmd_embed(args) -> str:
    return format_group(embed(read_code(args.code)))


def cmd_construct(args) -> str:
    params = args.params
    try:
        if args.family == "block":
            G = block_group(*params)
        elif args.family == "fpf":
            G = fpf_involution(*params)
        else:
            G = two_subset_group(*params)
    except TypeError:
        raise SystemExit(_usage_error(f"wrong number of --params for family {args.family}"))
    return format_group(G)


def cmd_verify(args) -> str:
    cfg = VerifyConfig(cap=args.cap, seed=args.seed)
    if args.suites:
        cfg.suites = [s.strip() for s in args.suites.split(",") if s.strip()]
        unknown = [s for s in cfg.suites if s not in SUITES]
        if unknown:
            raise SystemExit(_usage_error(f"unknown suites: {', '.join(unknown)}"))
    if args.samples is not None:
        cfg.samples = args.samples
    report = run_verify(cfg)
    args.exit_code = 0 if report["passed"] else 1
    return _dump_json(report)


def _usage_error(msg: str) -> int:
    print(f"weakqfs: error: {msg}", file=sys.stderr)
    return 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weakqfs", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt="json"):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration cap (group order)")
        p.add_argument("--format", choices=("json", "csv"), default=fmt)
        p.add_argument("--out", help="write output here instead of stdout")

    p = sub.add_parser("chars", help="character table of S_n as CSV")
    p.add_argument("n", type=int)
    common(p, "csv")
    p.set_defaults(func=cmd_chars)

    p = sub.add_parser("dh", help="exact weak-sampling distance D_H and its bounds")
    p.add_argument("group", help="group file")
    p.add_argument("--c", type=float, default=1.0, help="exponent in the (log2 n!)^-c threshold")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(func=cmd_dh)

    p = sub.add_parser("mindeg", help="minimal degree")
    p.add_argument("group")
    common(p, "csv")
    p.set_defaults(func=cmd_mindeg)

    p = sub.add_parser("supportdist", help="support distribution k,|H_k|")
    p.add_argument("group")
    common(p, "csv")
    p.set_defaults(func=cmd_supportdist)

    p = sub.add_parser("embed", help="embed a binary code file as a group file")
    p.add_argument("code")
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("construct", help="emit a named family as a group file")
    p.add_argument("--family", choices=("block", "fpf", "two-subset"), required=True)
    p.add_argument("--params", type=int, nargs="+", required=True)
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--suites", help="comma-separated suite names (default: all)")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--samples", type=int)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.exit_code = 0
    try:
        text = args.func(args)
    except WeakQFSError as exc:
        print(json.dumps({"error": exc.kind, "message": str(exc)}), file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return args.exit_code


if __name__ == "__main__":
    sys.exit(main())
