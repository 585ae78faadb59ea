"""Command-line front end.

    triestem [options] [FILE ...]      stem tokens or running text
    triestem eval [options]            check the gold set (exit 0 iff all pass)

Exit status: 0 ok, 1 data-file or I/O error, 2 usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import BinaryIO, Callable, Iterable, TextIO

from . import __version__
from .errors import DataFileError
from .evaluation import fuzz_trie_vs_oracle, load_gold, random_words, run_gold
from .pipeline import ConfigError, Pipeline, StemmerConfig
from .stock import CLASS_NAMES, load_data

EXIT_OK, EXIT_DATA, EXIT_USAGE = 0, 1, 2

_ALPHA_RUN = re.compile(rb"[A-Za-z]+")


def _pass_list(value: str) -> list[str]:
    names = [v.strip() for v in value.split(",") if v.strip()]
    unknown = [n for n in names if n not in CLASS_NAMES]
    if unknown:
        raise argparse.ArgumentTypeError(
            f"unknown pass {', '.join(unknown)} (choose from {', '.join(CLASS_NAMES)})")
    return names


def _positive_int(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value!r} is not an integer") from None
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triestem",
        description="Stem English words with longest-match suffix rules. "
                    "Use 'triestem eval' to check the gold set.")
    parser.add_argument("files", nargs="*", metavar="FILE",
                        help="input files (default: standard input)")
    parser.add_argument("--mode", choices=("token", "text"), default="token",
                        help="token: one token per line; text: stem alphabetic runs in running text")
    parser.add_argument("--data-dir", help="directory with *.rules, exceptions.txt, names.txt")
    parser.add_argument("--passes", type=_pass_list,
                        help="comma-separated passes to run, in order (default: all)")
    parser.add_argument("--disable", type=_pass_list, default=[],
                        help="comma-separated passes to leave out")
    parser.add_argument("--min-stem", type=_positive_int,
                        help="minimum length kept by a rewriting rule (default 3)")
    parser.add_argument("--trace", action="store_true",
                        help="write per-token pass traces to standard error")
    parser.add_argument("--preserve-case", action="store_true",
                        help="re-apply lower/Initial/UPPER capitalization to stems")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def build_eval_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="triestem eval",
                                     description="Run the gold set against the configured stemmer.")
    parser.add_argument("--data-dir", help="directory with *.rules, exceptions.txt, names.txt")
    parser.add_argument("--gold", help="gold fixture (default: bundled)")
    parser.add_argument("--fuzz", type=int, default=0, metavar="N",
                        help="also compare each trie with the brute-force oracle on N random words")
    parser.add_argument("--seed", type=int, default=42)
    return parser


def restore_case(original: str, stem: str) -> str | None:
    """Give ``stem`` the capitalization pattern of ``original``.

    Returns None for mixed-case tokens such as ``mRNA``, which are left alone.
    """
    if original.islower():
        return stem
    if original.isupper():
        return stem.upper()
    if original[0].isupper() and (len(original) == 1 or original[1:].islower()):
        return stem[:1].upper() + stem[1:]
    return None


class _Stemmer:
    def __init__(self, pipeline: Pipeline, preserve_case: bool, trace: TextIO | None):
        self.pipeline = pipeline
        self.preserve_case = preserve_case
        self.trace = trace

    def token(self, token: str) -> str:
        if self.trace is not None:
            print(self.pipeline.stem_with_trace(token), file=self.trace)
        stem = self.pipeline.stem(token)
        if self.preserve_case and stem != token:
            cased = restore_case(token, stem)
            if cased is not None:
                return cased
        return stem

    def text_token(self, token: str) -> str:
        if restore_case(token, token) is None:
            return token
        return self.token(token)


def stem_token_lines(lines: Iterable[bytes], stemmer: _Stemmer, out: BinaryIO) -> None:
    for raw in lines:
        token = raw.decode("utf-8", "surrogateescape").strip()
        out.write(stemmer.token(token).encode("utf-8", "surrogateescape") + b"\n")


def stem_text_lines(lines: Iterable[bytes], stemmer: _Stemmer, out: BinaryIO) -> None:
    def replace(match: re.Match) -> bytes:
        return stemmer.text_token(match.group().decode("ascii")).encode("ascii")

    for raw in lines:
        out.write(_ALPHA_RUN.sub(replace, raw))


def _open_inputs(files: list[str], stdin: BinaryIO) -> Iterable[bytes]:
    if not files:
        yield from stdin
        return
    for path in files:
        if path == "-":
            yield from stdin
            continue
        with open(path, "rb") as fh:
            yield from fh


def run(argv: list[str], stdin: BinaryIO, stdout: BinaryIO, stderr: TextIO) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    passes = args.passes if args.passes is not None else list(CLASS_NAMES)
    overlap = set(passes) & set(args.disable)
    if args.passes is not None and overlap:
        print(f"triestem: error: --passes and --disable both name {', '.join(sorted(overlap))}",
              file=stderr)
        return EXIT_USAGE
    passes = [p for p in passes if p not in args.disable]

    try:
        config = StemmerConfig(
            enabled_passes=tuple(passes),
            min_stem_length=args.min_stem if args.min_stem is not None else 3,
        )
        data = load_data(args.data_dir)
        pipeline = Pipeline.from_data(data, config)
    except ConfigError as exc:
        print(f"triestem: error: {exc}", file=stderr)
        return EXIT_USAGE
    except DataFileError as exc:
        for err in exc.errors:
            print(f"triestem: {err}", file=stderr)
        return EXIT_DATA

    stemmer = _Stemmer(pipeline, args.preserve_case, stderr if args.trace else None)
    handler = stem_text_lines if args.mode == "text" else stem_token_lines
    try:
        handler(_open_inputs(args.files, stdin), stemmer, stdout)
    except OSError as exc:
        print(f"triestem: {exc}", file=stderr)
        return EXIT_DATA
    stdout.flush()
    return EXIT_OK


def run_eval(argv: list[str], stdout: TextIO, stderr: TextIO) -> int:
    parser = build_eval_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        data = load_data(args.data_dir)
        pairs = load_gold(args.gold)
    except DataFileError as exc:
        for err in exc.errors:
            print(f"triestem: {err}", file=stderr)
        return EXIT_DATA
    except OSError as exc:
        print(f"triestem: {exc}", file=stderr)
        return EXIT_DATA

    report = run_gold(Pipeline.from_data(data), pairs)
    print(report.summary(), file=stdout)
    ok = report.ok

    if args.fuzz > 0:
        words = random_words(args.fuzz, 12, args.seed)
        pipeline = Pipeline.from_data(data)
        for name, trie in pipeline.tries:
            fuzz = fuzz_trie_vs_oracle(trie, data.class_named(name).rules, words=words)
            print(f"{name}: {len(fuzz.mismatches)} mismatches in {fuzz.samples} lookups", file=stdout)
            ok = ok and fuzz.ok
    return EXIT_OK if ok else EXIT_DATA


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if argv and argv[0] == "eval":
        return run_eval(argv[1:], sys.stdout, sys.stderr)
    return run(argv, sys.stdin.buffer, sys.stdout.buffer, sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
