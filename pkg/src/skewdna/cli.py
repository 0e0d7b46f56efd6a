"""Command line interface: ``skewdna {table,analyze,search,encode,verify}``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import gf16
from .code import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    CodeError,
    contains,
    encode,
    make_code,
    spanning_codewords,
)
from .dna import (
    TABLE1,
    CodebookFormatError,
    DnaError,
    build_codebook,
    codebook_lines,
    codeword_to_dna,
    dna_reverse,
    dna_to_codeword,
    read_codebook,
    tau,
    verify_reversible,
)
from .r16 import to_hex
from .report import code_report
from .search import PALINDROMIC, THETA_PALINDROMIC, search_divisors
from .skewpoly import SkewPolyError, from_text, to_text

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INVALID = 2
EXIT_BUDGET = 3

log = logging.getLogger("skewdna")


def _emit(args: argparse.Namespace, payload: dict | list, text: str) -> None:
    out = json.dumps(payload, indent=2) if args.format == "json" else text
    if getattr(args, "out", None):
        Path(args.out).write_text(out + "\n", encoding="utf-8")
    else:
        print(out)


def _words(c) -> str:
    return ",".join(to_hex(a) for a in c)


def _report_text(r: dict) -> str:
    flags = ", ".join(k for k, v in r["class"].items() if v) or "none"
    rev = r["reversibility"]
    lines = [
        f"generator   {r['generator']}  (degree {r['degree']}, {flags})",
        f"parameters  [n={r['n']}, k={r['k']}, d={r['d_r16']}]  Gray-image d={r['d_gray_f16']}",
        f"components  dimensions {r['component_dimensions']}",
        f"reversible  {'pass' if rev['pass'] else 'FAIL'} ({rev['checked']} codewords checked)",
    ]
    if rev["witness"]:
        lines.append(f"witness     {rev['witness']}")
    lines.extend(f"note        {note}" for note in r.get("notes", []))
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> int:
    rows = []
    for power, pair in TABLE1:
        x = 0 if power is None else gf16.gf_exp(power)
        rows.append(
            {
                "power": "0" if power is None else f"a^{power}",
                "hex": gf16.to_hex(x),
                "pair": pair,
                "fourth_power": gf16.describe(gf16.gf_frob(x)),
                "fourth_power_pair": tau(gf16.gf_frob(x)),
            }
        )
    text = "\n".join(
        f"{r['power']:>5}  {r['hex']}  {r['pair']}   x^4 = {r['fourth_power']:<5} {r['fourth_power_pair']}"
        for r in rows
    )
    _emit(args, rows, text)
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    code = make_code(from_text(args.generator), args.n, allow_odd=args.allow_odd)
    report = code_report(code, samples=args.samples, seed=args.seed, budget=args.budget)
    _emit(args, report, _report_text(report))
    return EXIT_OK if report["reversibility"]["pass"] else EXIT_FAIL


def cmd_search(args: argparse.Namespace) -> int:
    cls = args.cls.replace("-", "_")
    result = search_divisors(args.n, args.degree, cls, budget=args.budget, seed=args.seed, mode=args.mode)
    reports = []
    for g in result.generators:
        code = make_code(g, args.n)
        reports.append(code_report(code, budget=args.budget))
    payload = {
        "n": args.n,
        "degree": args.degree,
        "class": cls,
        "mode": result.mode,
        "tested": result.tested,
        "space": result.space,
        "count": len(reports),
        "generators": reports,
    }
    lines = [
        f"# n={args.n} degree={args.degree} class={cls} mode={result.mode} "
        f"tested={result.tested} found={len(reports)}"
    ]
    for r in reports:
        rev = "reversible" if r["reversibility"]["pass"] else "NOT reversible"
        lines.append(f"{r['generator']}  [{r['n']},{r['k']},{r['d_r16']}]  {rev}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_encode(args: argparse.Namespace) -> int:
    code = make_code(from_text(args.generator), args.n, allow_odd=args.allow_odd)
    if args.all_spanning:
        words = spanning_codewords(code)
    elif args.message is not None:
        words = [encode(code, from_text(args.message))]
    else:
        raise CodeError("give --message or --all-spanning")
    book = build_codebook(code, words)
    text = "\n".join(codebook_lines(book))
    payload = {
        "n": book.n,
        "k": book.k,
        "generator": book.generator,
        "codewords": [{"hex": _words(c), "dna": s} for c, s in book.entries],
    }
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    book = read_codebook(args.codebook)
    generator = args.generator or book.generator
    n = args.n or book.n
    code = make_code(from_text(generator), n, allow_odd=args.allow_odd)
    failures = []
    for lineno, (c, s) in enumerate(book.entries, start=2):
        if codeword_to_dna(c) != s:
            raise CodebookFormatError(f"line {lineno}: DNA field does not match the hex codeword")
        if not contains(code, c):
            failures.append({"line": lineno, "reason": "not a codeword", "codeword": _words(c)})
            continue
        back = dna_to_codeword(dna_reverse(s))
        if not contains(code, back):
            failures.append({"line": lineno, "reason": "reversed DNA is not a codeword", "codeword": _words(c)})
    rev = verify_reversible(code, samples=args.samples, seed=args.seed)
    passed = rev.passed and not failures
    payload = {
        "generator": to_text(code.g),
        "n": code.n,
        "lines": len(book.entries),
        "line_failures": failures,
        "reversibility": rev.as_dict(),
        "pass": passed,
    }
    lines = [f"{len(book.entries)} codebook lines, generator {to_text(code.g)}, n={code.n}"]
    lines += [f"line {f['line']}: {f['reason']}: {f['codeword']}" for f in failures]
    lines.append(f"reversibility {'pass' if rev.passed else 'FAIL'} ({rev.checked} spanning codewords)")
    if rev.witness is not None:
        lines.append(f"witness {_words(rev.witness)}")
    lines.append("PASS" if passed else "FAIL")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if passed else EXIT_FAIL


def _positive(s: str) -> int:
    v = int(s)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=0, help="extra random codewords to check")
    common.add_argument("--budget", type=_positive, default=DEFAULT_BUDGET)
    common.add_argument("--allow-odd", action="store_true")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="skewdna", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="print the GF(16) <-> DNA pair table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("analyze", parents=[common], help="parameters and reversibility of (g)")
    p.add_argument("generator", help="comma-separated R16 hex words, lowest degree first")
    p.add_argument("--n", type=_positive, required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", parents=[common], help="find palindromic right divisors of x^n - 1")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument(
        "--class",
        dest="cls",
        choices=("palindromic", "theta-palindromic", PALINDROMIC, THETA_PALINDROMIC),
        required=True,
    )
    p.add_argument("--mode", choices=("auto", "exhaustive", "random"), default="auto")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("encode", parents=[common], help="write a codebook")
    p.add_argument("generator")
    p.add_argument("--n", type=_positive, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--message", help="message polynomial in hex words")
    group.add_argument("--all-spanning", action="store_true", help="emit the 4k spanning codewords")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("verify", parents=[common], help="check a codebook for reversibility")
    p.add_argument("codebook", type=Path)
    p.add_argument("--generator", help="defaults to the codebook header")
    p.add_argument("--n", type=_positive, help="defaults to the codebook header")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CodeError, SkewPolyError, CodebookFormatError, DnaError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
