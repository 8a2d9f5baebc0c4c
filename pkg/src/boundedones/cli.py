"""Command-line entry point.

Exit codes: 0 success, 1 infeasible, 2 invalid input, 3 indeterminate,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .bench import growth_exponent, rows_to_csv, run_bench
from .core import (
    CodeBook,
    CodeError,
    DecodeError,
    Infeasible,
    average_cost,
    decode,
    encode,
    parse_distribution,
)
from .dp import optimal_alphabetic
from .kraft import FEASIBLE, INFEASIBLE, NotFeasible, build_from_lengths, check_feasibility
from .prefix import alphabetic_binding_threshold, optimal_prefix, prefix_binding_threshold
from .verify import run_suites

log = logging.getLogger("boundedones")

EXIT_OK = 0
EXIT_INFEASIBLE = 1
EXIT_INVALID = 2
EXIT_INDETERMINATE = 3
EXIT_VERIFY_FAILED = 4


class UsageError(Exception):
    pass


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_distribution(args):
    dist, float_mode = parse_distribution(_read_text(args.input))
    if float_mode:
        log.warning("weights need more than 9 decimal places; using float arithmetic")
    return dist


def _book_text(book: CodeBook, dist) -> str:
    cost = average_cost(book, dist)
    lines = [f"{book.label(i)}\t{w or 'ε'}" for i, w in enumerate(book.codewords)]
    lines.append(f"raw cost: {cost.raw}")
    lines.append(f"normalized cost: {cost.normalized}")
    return "\n".join(lines) + "\n"


def _write_book(args, book: CodeBook, dist, extra: dict | None = None) -> None:
    if args.format == "json":
        data = book.to_dict(dist)
        if extra:
            data.update(extra)
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    else:
        text = _book_text(book, dist)
        if extra:
            text += "".join(f"{k}: {v}\n" for k, v in extra.items())
        _emit(text, args.out)
    if args.out:
        cost = average_cost(book, dist)
        print(f"raw cost: {cost.raw}\nnormalized cost: {cost.normalized}")


def cmd_alphabetic(args) -> int:
    dist = _load_distribution(args)
    book, _ = optimal_alphabetic(dist, args.D, algorithm=args.algo)
    _write_book(args, book, dist)
    return EXIT_OK


def cmd_prefix(args) -> int:
    dist = _load_distribution(args)
    solution = optimal_prefix(dist, args.D)
    extra = None
    if args.thresholds:
        extra = {
            "prefix_threshold": prefix_binding_threshold(dist),
            "alphabetic_threshold": alphabetic_binding_threshold(dist),
        }
    _write_book(args, solution.book, dist, extra)
    return EXIT_OK


def _parse_lengths(text: str) -> list[int]:
    text = text.strip()
    try:
        if text.startswith("["):
            values = json.loads(text)
        else:
            values = [int(x) for x in text.split(",") if x.strip()]
        return [int(v) for v in values]
    except (ValueError, TypeError):
        raise UsageError(f"cannot parse lengths: {text!r}") from None


def cmd_kraft(args) -> int:
    if args.lengths is None:
        raise UsageError("--lengths is required")
    lengths = _parse_lengths(args.lengths)
    if args.D < 1:
        raise UsageError("kraft needs D >= 1")
    report = check_feasibility(lengths, args.D)
    data = report.to_dict()
    status = {FEASIBLE: EXIT_OK, INFEASIBLE: EXIT_INFEASIBLE}.get(
        report.verdict, EXIT_INDETERMINATE
    )
    if status == EXIT_INDETERMINATE:
        log.warning(
            "level test inconclusive for a non-full multiset; "
            "for small inputs try the exhaustive search (boundedones.oracle.brute_feasible)"
        )
    if args.construct and report.feasible:
        try:
            book = build_from_lengths(lengths, args.D)
        except NotFeasible as exc:
            data["construction_error"] = str(exc)
            status = EXIT_INFEASIBLE
        else:
            if args.labels:
                labels = tuple(s.strip() for s in args.labels.split(","))
                if len(labels) != len(lengths):
                    raise UsageError("label count does not match lengths")
                book = CodeBook(book.codewords, book.mode, book.D, labels)
            data["codebook"] = book.to_dict()
    if args.format == "json":
        _emit(json.dumps(data, indent=2) + "\n", args.out)
    else:
        lines = [f"verdict: {report.verdict}", "j\tN_j\tcapacity\tM_j+1\tbound\tslack"]
        for row in report.rows:
            lines.append(
                f"{row.j}\t{row.count}\t{row.capacity}\t{row.blocked_next}\t{row.bound}\t{row.slack}"
            )
        if "codebook" in data:
            lines += [f"{e.get('label', e['symbol'])}\t{e['codeword']}" for e in data["codebook"]["entries"]]
        if "construction_error" in data:
            lines.append(f"construction failed: {data['construction_error']}")
        _emit("\n".join(lines) + "\n", args.out)
    return status


def cmd_verify(args) -> int:
    results = run_suites(
        n_max=args.n_max,
        d_max=args.d_max,
        trials=args.trials,
        seed=args.seed,
        perturb=args.perturb,
    )
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.name} ({r.cases} cases)")
        if not r.passed:
            print(f"  counterexample: {r.failure}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY_FAILED


def cmd_bench(args) -> int:
    sizes = [int(x) for x in args.sizes.split(",") if x.strip()]
    rows = run_bench(sizes, args.D, seed=args.seed)
    _emit(rows_to_csv(rows), args.out)
    if len(set(sizes)) >= 2 and min(sizes) > 1:
        for algo in ("naive", "ky"):
            log.info("%s split-candidate growth exponent: %.3f", algo, growth_exponent(rows, algo))
    return EXIT_OK


def _load_book(path: str) -> CodeBook:
    try:
        book = CodeBook.from_dict(json.loads(_read_text(path)))
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"invalid codebook {path}: {exc}") from None
    if not book.is_prefix_free():
        raise UsageError("codebook is not prefix-free")
    return book


def _symbol_index(book: CodeBook, token: str) -> int:
    if book.labels is not None and token in book.labels:
        return book.labels.index(token)
    try:
        return int(token)
    except ValueError:
        raise UsageError(f"unknown symbol {token!r}") from None


def cmd_encode(args) -> int:
    book = _load_book(args.codebook)
    message = [_symbol_index(book, tok) for tok in _read_text(args.input).split()]
    _emit(encode(book, message) + "\n", args.out)
    return EXIT_OK


def cmd_decode(args) -> int:
    book = _load_book(args.codebook)
    bits = "".join(_read_text(args.input).split())
    symbols = decode(book, bits)
    text = " ".join(book.label(s) for s in symbols)
    _emit(text + "\n" if text else "", args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boundedones",
        description="Optimal binary codes with at most D ones per codeword.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_d=True, default_d=None):
        if need_d:
            p.add_argument("-D", type=int, required=default_d is None, default=default_d,
                           help="maximum number of ones per codeword")
        p.add_argument("--out", help="write the main output here instead of stdout")
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("alphabetic", help="optimal order-preserving code")
    p.add_argument("--input", help="distribution file (default: stdin)")
    p.add_argument("--algo", choices=("naive", "ky"), default="ky")
    common(p)
    p.set_defaults(func=cmd_alphabetic)

    p = sub.add_parser("prefix", help="optimal prefix code")
    p.add_argument("--input", help="distribution file (default: stdin)")
    p.add_argument("--thresholds", action="store_true",
                   help="also report the smallest non-binding budgets")
    common(p)
    p.set_defaults(func=cmd_prefix)

    p = sub.add_parser("kraft", help="level test and leftmost construction from lengths")
    p.add_argument("--lengths", help="comma-separated integers or a JSON array")
    p.add_argument("--construct", action="store_true", help="also build a codebook")
    p.add_argument("--labels", help="comma-separated symbol labels for --construct")
    common(p)
    p.set_defaults(func=cmd_kraft)

    p = sub.add_parser("verify", help="cross-check solvers against brute force")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--d-max", type=int, default=4)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time both solvers, CSV output")
    p.add_argument("--sizes", default="64,128,256,512")
    p.add_argument("-D", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)

    for name, func in (("encode", cmd_encode), ("decode", cmd_decode)):
        p = sub.add_parser(name, help=f"{name} with a codebook JSON file")
        p.add_argument("--codebook", required=True)
        p.add_argument("--input", help="message file (default: stdin)")
        p.add_argument("--out")
        p.set_defaults(func=func)
    return parser


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and (args.n_max > 8 or args.d_max < 0):
        print("error: --n-max must be <= 8 and --d-max >= 0", file=sys.stderr)
        return EXIT_INVALID
    if getattr(args, "D", 0) is not None and getattr(args, "D", 0) < 0:
        print("error: D must be >= 0", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except Infeasible as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INFEASIBLE
    except DecodeError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    except (CodeError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
