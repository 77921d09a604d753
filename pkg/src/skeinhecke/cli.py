"""Command-line front end.

Partitions are written ``4,2,1``; braid words are whitespace-separated signed
generator indices such as ``"1 -2 1"``.  Exit status: 0 success, 1 usage or
parse error (including size guards), 2 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import hecke, verify
from .braid import parse_braid_word
from .hecke import GuardError
from .qdim import alpha, alpha_factors, classical_dim, qdim, qdim_factors
from .young import YoungDiagram, parse_partition, partitions_upto

TABLE_MAX_CELLS = 8
VERIFY_HECKE_MAX_CELLS = 5
VERIFY_PURE_MAX_CELLS = 8
HECKE_CHECKS = frozenset(
    {"idempotency", "orthogonality", "closure", "exclose", "nero", "absorption", "split", "splitplus", "markov"}
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _partition(text: str) -> YoungDiagram:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if k < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {k}")
    return k


def _bracket_product(ks) -> str:
    return "".join(f"[{k}]" for k in ks)


def qdim_factored(lam: YoungDiagram, N: int) -> str:
    num, den = qdim_factors(lam, N)
    if num == [0]:
        return "0"
    top = _bracket_product(num) or "1"
    return top if not den else f"{top}/{_bracket_product(den)}"


def alpha_factored(lam: YoungDiagram) -> str:
    shift = sum(c for c, _ in alpha_factors(lam))
    hooks = sorted((h for _, h in alpha_factors(lam) if h > 1), reverse=True)
    parts = []
    if shift:
        parts.append("s" if shift == 1 else f"s^{shift}")
    if hooks:
        parts.append(_bracket_product(hooks))
    return "*".join(parts) or "1"


def _emit(args, text_lines, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_qdim(args) -> int:
    lam, N = args.partition, args.N
    q = qdim(lam, N)
    dim = classical_dim(lam, N)
    factored = qdim_factored(lam, N)
    payload = {"partition": list(lam.rows), "N": N, "qdim": str(q), "factored": factored, "dim": dim}
    _emit(args, [f"{factored} = {q}" if factored != str(q) else str(q), f"classical dimension: {dim}"], payload)
    return 0


def cmd_alpha(args) -> int:
    lam = args.partition
    a = alpha(lam)
    factored = alpha_factored(lam)
    payload = {"partition": list(lam.rows), "alpha": str(a), "factored": factored}
    _emit(args, [f"{factored} = {a}" if factored != str(a) else str(a)], payload)
    return 0


def cmd_homfly(args) -> int:
    hecke._guard(args.strands, hecke.DIRECT_SUM_GUARD, "homfly")
    try:
        word = parse_braid_word(args.word, args.strands)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    framed = hecke.homfly_of_braid(word)
    lines = [f"framed: {framed}"]
    payload = {"strands": args.strands, "word": list(word.letters), "writhe": word.writhe, "framed": str(framed)}
    if args.normalized:
        norm = hecke.normalized_homfly(word)
        lines.append(f"normalized: {norm}")
        payload["normalized"] = str(norm)
    _emit(args, lines, payload)
    return 0


def table_rows(max_cells: int, N: int) -> list[dict]:
    return [
        {
            "partition": list(lam.rows),
            "alpha": str(alpha(lam)),
            "qdim": str(qdim(lam, N)),
            "dim": classical_dim(lam, N),
        }
        for lam in partitions_upto(max_cells)
    ]


def cmd_table(args) -> int:
    limit = hecke.max_strands(TABLE_MAX_CELLS)
    if args.max_cells > limit:
        raise UsageError(f"--max-cells {args.max_cells} exceeds {limit}; widen with --unsafe-max")
    rows = table_rows(args.max_cells, args.N)
    if args.format == "json":
        print(json.dumps(rows))
        return 0
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["partition", "alpha", "qdim", "dim"], lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, "partition": ",".join(map(str, row["partition"]))})
    sys.stdout.write(buf.getvalue())
    return 0


def cmd_verify(args) -> int:
    names = verify.DEFAULT_ORDER if not args.checks else tuple(args.checks.split(","))
    unknown = [n for n in names if n not in verify.CHECKS]
    if unknown:
        raise UsageError(f"unknown check(s): {', '.join(unknown)}; choose from {', '.join(verify.DEFAULT_ORDER)}")
    hecke_limit = hecke.max_strands(VERIFY_HECKE_MAX_CELLS)
    pure_limit = hecke.max_strands(VERIFY_PURE_MAX_CELLS)
    for n in names:
        limit = hecke_limit if n in HECKE_CHECKS else pure_limit
        if args.max_cells > limit:
            raise UsageError(f"--max-cells {args.max_cells} exceeds {limit} for check {n!r}; widen with --unsafe-max")
    failed = total = 0
    for name, label, ok in verify.run(names, args.max_cells):
        total += 1
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'} [{name}] {label}")
    print(f"{total - failed}/{total} passed")
    return 0 if failed == 0 else 2


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="skeinhecke", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument(
        "--unsafe-max",
        type=_positive,
        metavar="N",
        help="widen size guards to N strands/cells (never narrows; same as SKEIN_MAX_STRANDS)",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("qdim", help="quantum dimension of the sl(N) irreducible V_lambda")
    q.add_argument("-p", "--partition", type=_partition, required=True, help="partition such as 4,2,1")
    q.add_argument("-N", type=_positive, required=True, help="rank parameter N >= 1")
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_qdim)

    a = sub.add_parser("alpha", help="scalar alpha_lambda with e_lambda^2 = alpha_lambda e_lambda")
    a.add_argument("-p", "--partition", type=_partition, required=True, help="partition such as 4,2,1")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=cmd_alpha)

    h = sub.add_parser("homfly", help="framed Homfly polynomial of a braid closure")
    h.add_argument("-n", "--strands", type=_positive, required=True)
    h.add_argument("-w", "--word", default="", help='signed generator indices, e.g. "1 -2 1"')
    h.add_argument("--normalized", action="store_true", help="divide by (x v^-1)^writhe and the unknot value")
    h.add_argument("--format", choices=("text", "json"), default="text")
    h.set_defaults(func=cmd_homfly)

    t = sub.add_parser("table", help="alpha, qdim and dimension for all small partitions")
    t.add_argument("--max-cells", type=_positive, required=True)
    t.add_argument("-N", type=_positive, required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", help="run invariant suites against brute-force Hecke computation")
    v.add_argument("--max-cells", type=_positive, default=4)
    v.add_argument("--checks", default="", help=f"comma-separated subset of: {', '.join(verify.DEFAULT_ORDER)}")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.unsafe_max:
        hecke.set_unsafe_max(args.unsafe_max)
    try:
        return args.func(args)
    except (UsageError, GuardError) as exc:
        print(f"skeinhecke: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
