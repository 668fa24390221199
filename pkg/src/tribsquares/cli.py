"""Command-line interface: ``tribsquares <command> ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import oracle
from .counts import breakpoints, count_cubes, count_cubes_at_tm, count_squares, count_squares_at_tm
from .errors import DomainError, NotAFactorError, ResourceError
from .kernel import decompose, kernel_descriptor, ker
from .verify import identity_failures, verify_cubes, verify_squares
from .words import kernel_number, prefix, tribonacci_number

TABLE_FIELDS = ["m", "t", "k", "A_t", "B_t", "alpha", "beta", "gamma", "theta"]


def table_rows(from_m: int, to_m: int) -> list[dict]:
    rows = []
    for m in range(from_m, to_m + 1):
        row = {
            "m": m,
            "t": tribonacci_number(m),
            "k": kernel_number(m),
            "A_t": count_squares_at_tm(m),
            "B_t": count_cubes_at_tm(m),
            "alpha": None, "beta": None, "gamma": None, "theta": None,
        }
        if m >= 4:
            bp = breakpoints(m)
            row.update(alpha=bp.alpha, beta=bp.beta, gamma=bp.gamma, theta=bp.theta)
        rows.append(row)
    return rows


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj) + "\n")
    else:
        for key, value in obj.items():
            out.write(f"{key}: {value}\n")


def cmd_gen(args, out):
    out.write(prefix(args.n) + "\n")
    return 0


def cmd_count(args, out):
    result = (count_squares if args.kind == "squares" else count_cubes)(args.n)
    if args.format == "json":
        record = {"n": result.n, "quantity": "A" if args.kind == "squares" else "B", "value": result.value}
        if args.explain:
            record.update(regime=result.regime, m=result.m)
        out.write(json.dumps(record) + "\n")
    elif args.explain:
        out.write(f"{result.value}\nregime: {result.regime}\nm: {result.m}\n")
    else:
        out.write(f"{result.value}\n")
    return 0


def cmd_table(args, out):
    if not 0 <= args.from_m <= args.to_m:
        raise DomainError(f"need 0 <= from_m <= to_m, got {args.from_m}, {args.to_m}")
    rows = table_rows(args.from_m, args.to_m)
    if args.format == "json":
        out.write(json.dumps(rows) + "\n")
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_FIELDS, lineterminator="\n")
        writer.writeheader()
        writer.writerows({key: "" if v is None else v for key, v in row.items()} for row in rows)
        out.write(buf.getvalue())
    return 0


def cmd_kernel(args, out):
    if args.word is not None:
        kd = ker(args.word)
        dec = decompose(args.word)
        obj = {"word": args.word, "kernel": kd.word, "order": kd.order, "offset": kd.offset,
               "i": dec.i, "j": dec.j}
    else:
        kd = kernel_descriptor(args.m)
        obj = {"order": kd.order, "kernel": kd.word, "k": len(kd.word),
               "end_position_first": kd.end_position_first}
    _emit(obj, args.format, out)
    return 0


def cmd_breakpoints(args, out):
    bp = breakpoints(args.m)
    _emit({"m": bp.m, "alpha": bp.alpha, "beta": bp.beta, "gamma": bp.gamma, "theta": bp.theta},
          args.format, out)
    return 0


def cmd_verify(args, out):
    if args.max_n < 1:
        raise DomainError(f"max_n must be >= 1, got {args.max_n}")
    status = 0
    if args.what in ("squares", "all"):
        bad = verify_squares(args.max_n, args.cap)
        out.write(f"squares n<={args.max_n}: {'FAIL ' + str(bad) if bad else 'ok'}\n")
        status |= bad is not None
    if args.what in ("cubes", "all"):
        bad = verify_cubes(args.max_n, args.cap)
        out.write(f"cubes n<={args.max_n}: {'FAIL ' + str(bad) if bad else 'ok'}\n")
        status |= bad is not None
    if args.what in ("identities", "all"):
        failures = identity_failures()
        out.write(f"identities: {'FAIL ' + failures[0] if failures else 'ok'}\n")
        status |= bool(failures)
    return int(status)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tribsquares",
        description="Distinct squares and cubes in prefixes of the Tribonacci word.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="print T[1,n]")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("count", help="distinct squares A(n) or cubes B(n) in T[1,n]")
    p.add_argument("kind", choices=["squares", "cubes"])
    p.add_argument("n", type=int)
    p.add_argument("--explain", action="store_true", help="also print the formula branch and band m")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="per-m table of t, k, A(t_m), B(t_m) and breakpoints")
    p.add_argument("from_m", type=int)
    p.add_argument("to_m", type=int)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("kernel", help="kernel word K_m, or Ker and decomposition of a factor")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("m", type=int, nargs="?")
    g.add_argument("--word")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("breakpoints", help="alpha, beta, gamma, theta for band m >= 4")
    p.add_argument("m", type=int)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_breakpoints)

    p = sub.add_parser("verify", help="check closed forms against the brute-force oracle")
    p.add_argument("max_n", type=int)
    p.add_argument("what", nargs="?", choices=["squares", "cubes", "identities", "all"], default="all")
    p.add_argument("--cap", type=int, default=oracle.DEFAULT_CAP, help="oracle size cap")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (DomainError, NotAFactorError, ResourceError) as exc:
        print(f"tribsquares: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
