"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 resource-bound refusal,
3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

from .bijections import TRANSFORMS
from .distributions import (
    DEFAULT_BOUND, GF_BOUND, METHODS, avoider_count, build_table, consecutive_avoiders,
    crosscheck_bfile, read_bfile,
)
from .errors import BoundExceededError, ConsistencyError
from .paths import DyckPath, MotzkinPath
from .patterns import TAUS, check_tau
from .perm import Permutation, as_word
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_BOUND, EXIT_VERIFY = 0, 1, 2, 3

BOUND_HELP = (
    f"largest n enumerated by brute force (default {DEFAULT_BOUND}); "
    "cost grows like the Catalan numbers, roughly 4x per extra n"
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_n_range(text: str) -> list[int]:
    """``"7"``, ``"1..5"`` or ``"2,4,6"``."""
    try:
        if ".." in text:
            lo, hi = (int(x) for x in text.split("..", 1))
            ns = list(range(lo, hi + 1))
        else:
            ns = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad n range {text!r}") from None
    if not ns or min(ns) < 0:
        raise argparse.ArgumentTypeError(f"n range must be nonempty and non-negative: {text!r}")
    return ns


def _tau(text: str) -> str:
    try:
        return check_tau(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="avoid312", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", help="tabulate a^tau_{n,k}")
    p.add_argument("--tau", type=_tau, required=True, help=f"one of {', '.join(TAUS)}")
    p.add_argument("--n", type=parse_n_range, required=True, help="n, a..b, or a,b,c")
    p.add_argument("--method", choices=METHODS + ("all",), default="closed")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help=BOUND_HELP)
    p.add_argument("--gf-bound", type=int, default=GF_BOUND, help="largest t-order for --method gf")
    p.add_argument("--bfile", help="OEIS b-file to cross-check the row-flattened table against")
    p.add_argument("--bfile-offset", type=int, default=0,
                   help="b-file index of the first cell of the table (default 0)")

    p = sub.add_parser("transform", help="apply a bijection to objects read one per line from stdin")
    p.add_argument("name", choices=list(TRANSFORMS))

    p = sub.add_parser("count", help="|S_n(3-1-2, tau)| from the closed formulas")
    p.add_argument("--tau", type=_tau, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("avoiders", help="count or list S_n(3-1-2, tau)")
    p.add_argument("--tau", type=_tau, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true", help="enumerate the members (brute force)")
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help=BOUND_HELP)

    p = sub.add_parser("verify", help="run exhaustive verification suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.add_argument("--bound", type=int, default=8, help="check every size up to this n (default 8)")
    p.add_argument("--max-bound", type=int, default=DEFAULT_BOUND, help=BOUND_HELP)
    return parser


def cmd_table(args, out, err) -> int:
    methods = METHODS if args.method == "all" else (args.method,)
    tables = {m: build_table(args.tau, args.n, m, args.bound, args.gf_bound) for m in methods}
    table = tables[methods[0]]
    if args.method == "all":
        table.method = "all"
    out.write(table.to_csv() if args.format == "csv" else table.to_json() + "\n")

    status = EXIT_OK
    if args.method == "all":
        cells = disagreements = 0
        for n in sorted(table.rows):
            width = max(len(t[n]) for t in tables.values())
            for k in range(width):
                cells += 1
                vals = {m: (t[n][k] if k < len(t[n]) else 0) for m, t in tables.items()}
                if len(set(vals.values())) > 1:
                    disagreements += 1
                    err.write(f"DISAGREE n={n} k={k} {vals}\n")
        err.write(f"agreement: {cells - disagreements}/{cells} cells across {', '.join(methods)}\n")
        if disagreements:
            status = EXIT_VERIFY

    if args.bfile:
        compared, bad = crosscheck_bfile(table, read_bfile(args.bfile), args.bfile_offset)
        for mm in bad:
            err.write(f"BFILE MISMATCH index={mm.index} bfile={mm.expected} table={mm.actual}\n")
        err.write(f"bfile: {compared - len(bad)}/{compared} terms match\n")
        if bad:
            status = EXIT_VERIFY
    return status


def _parse_object(kind: str, text: str):
    if kind == "perm":
        return Permutation.parse(text)
    if kind == "word":
        text = text.strip()
        if text in ("", "ε"):
            return ()
        try:
            return as_word(int(tok) for tok in text.split())
        except ValueError as exc:
            raise ValueError(f"cannot parse word from {text!r}: {exc}") from None
    if kind == "dyck":
        return DyckPath(text)
    return MotzkinPath(text)


def cmd_transform(args, inp, out, err) -> int:
    fn, kind, _ = TRANSFORMS[args.name]
    status = EXIT_OK
    for lineno, line in enumerate(inp, start=1):
        try:
            result = fn(_parse_object(kind, line))
        except ValueError as exc:
            err.write(f"line {lineno}: {exc}\n")
            status = EXIT_USAGE
            continue
        out.write(f"{result}\n")
    return status


def cmd_count(args, out) -> int:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    out.write(f"{avoider_count(args.tau, args.n)}\n")
    return EXIT_OK


def cmd_avoiders(args, out) -> int:
    if not args.list:
        return cmd_count(args, out)
    for sigma in consecutive_avoiders(args.tau, args.n, args.bound):
        out.write(f"{sigma}\n")
    return EXIT_OK


def cmd_verify(args, out, err) -> int:
    if args.bound > args.max_bound:
        raise BoundExceededError(f"--bound {args.bound} exceeds --max-bound {args.max_bound}")
    failed = total = 0
    for result in run_suite(args.suite, args.bound):
        total += 1
        failed += not result.passed
        out.write(json.dumps(result.as_dict()) + "\n")
        out.flush()
    err.write(f"{total - failed}/{total} checks passed\n")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    inp = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "table":
            return cmd_table(args, out, err)
        if args.command == "transform":
            return cmd_transform(args, inp, out, err)
        if args.command == "count":
            return cmd_count(args, out)
        if args.command == "avoiders":
            return cmd_avoiders(args, out)
        return cmd_verify(args, out, err)
    except BoundExceededError as exc:
        err.write(f"avoid312: {exc}\n")
        return EXIT_BOUND
    except ConsistencyError as exc:
        err.write(f"avoid312: internal consistency failure: {exc}\n")
        return EXIT_VERIFY
    except (UsageError, ValueError, OSError) as exc:
        err.write(f"avoid312: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
