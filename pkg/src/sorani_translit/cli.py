"""Command-line front end for batch transliteration and evaluation.

Reads UTF-8 text from a file or standard input, writes the transliterated
text to a file or standard output, and keeps all diagnostics on standard
error.  Exit codes: 0 success, 1 usage error, 2 I/O or encoding error,
3 when --strict saw warnings.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import BinaryIO, Iterator, TextIO

from .alphabet import DEFAULT_TABLE, Direction, load_override_rules
from .evaluation import (
    AlignmentError,
    EncodingError,
    evaluate_ar2la,
    evaluate_la2ar,
    load_corpus,
)
from .transliterate import transliterate_text

USAGE_EXIT = 1
IO_EXIT = 2
STRICT_EXIT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="sorani-translit",
        description=(
            "Transliterate Sorani Kurdish between the Arabic-based and "
            "Latin-based orthographies, or evaluate against a gold corpus."
        ),
    )
    parser.add_argument(
        "--direction",
        required=True,
        choices=[d.value for d in Direction],
        help="transliteration direction",
    )
    parser.add_argument("--in", dest="in_path", metavar="FILE",
                        help="input file (default: standard input)")
    parser.add_argument("--out", dest="out_path", metavar="FILE",
                        help="output file (default: standard output)")
    parser.add_argument("--digraphs", action="store_true",
                        help="accept ll/rr for ł/ř in Latin input")
    parser.add_argument("--override", metavar="FILE",
                        help="extra mapping rules, one 'source<TAB>target' per line")
    parser.add_argument("--eval", nargs=2, metavar=("ABO_GOLD", "LBO_GOLD"),
                        help="evaluate against a parallel gold corpus instead "
                             "of transliterating")
    parser.add_argument("--json", action="store_true",
                        help="emit the evaluation report as JSON")
    parser.add_argument("--strict", action="store_true",
                        help="treat warnings as failures (exit 3)")
    return parser


def _decoded_lines(stream: BinaryIO) -> Iterator[str]:
    """Yield decoded lines with terminators kept, tracking byte offsets."""
    offset = 0
    first = True
    for raw in stream:
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise EncodingError("<input>", offset + exc.start) from exc
        if first:
            line = line.lstrip("\ufeff")
            first = False
        offset += len(raw)
        yield line


def _run_transliterate(args, table, stdin: BinaryIO, stdout: BinaryIO,
                       stderr: TextIO) -> int:
    direction = Direction(args.direction)
    instream = open(args.in_path, "rb") if args.in_path else stdin
    outstream = open(args.out_path, "wb") if args.out_path else stdout
    saw_warnings = False
    try:
        for line in _decoded_lines(instream):
            result = transliterate_text(line, direction, table,
                                        digraphs=args.digraphs)
            outstream.write(result.output.encode("utf-8"))
            for span, message in result.warnings:
                saw_warnings = True
                print(f"warning: {span[0]}-{span[1]}: {message}", file=stderr)
        outstream.flush()
    finally:
        if args.in_path:
            instream.close()
        if args.out_path:
            outstream.close()
    return STRICT_EXIT if args.strict and saw_warnings else 0


def _run_eval(args, table, stdout: BinaryIO) -> int:
    corpus = load_corpus(args.eval[0], args.eval[1], table)
    direction = Direction(args.direction)
    if direction is Direction.AR2LA:
        report = evaluate_ar2la(corpus, table)
    else:
        report = evaluate_la2ar(corpus, table)
    if args.json:
        rendered = json.dumps(report.to_dict(), ensure_ascii=False, indent=2)
    else:
        rendered = report.to_text()
    stdout.write((rendered + "\n").encode("utf-8"))
    stdout.flush()
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    stderr = sys.stderr
    table = DEFAULT_TABLE
    if args.override:
        try:
            table = DEFAULT_TABLE.with_overrides(load_override_rules(args.override))
        except ValueError as exc:
            print(f"sorani-translit: {exc}", file=stderr)
            return USAGE_EXIT
        except OSError as exc:
            print(f"sorani-translit: {exc}", file=stderr)
            return IO_EXIT
    try:
        if args.eval:
            return _run_eval(args, table, sys.stdout.buffer)
        return _run_transliterate(args, table, sys.stdin.buffer,
                                  sys.stdout.buffer, stderr)
    except EncodingError as exc:
        print(f"sorani-translit: {exc}", file=stderr)
        return IO_EXIT
    except AlignmentError as exc:
        print(f"sorani-translit: {exc}", file=stderr)
        return IO_EXIT
    except OSError as exc:
        print(f"sorani-translit: {exc}", file=stderr)
        return IO_EXIT


if __name__ == "__main__":
    raise SystemExit(main())
