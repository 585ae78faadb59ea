"""Gold-set evaluation and the brute-force lookup oracle.

The gold fixture uses the exceptions-file conventions with a third field::

    word  expected-stem  class   # note

where class is a suffix class name or one of ``exception``, ``proper``,
``pipeline``.
"""

from __future__ import annotations

import os
import random
import string
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DataFileError, LineError
from .pipeline import Pipeline, Trace
from .rules import SuffixRule, _content_lines, is_letters
from .stock import CLASS_NAMES, GOLD_FILE, bundled_data_dir
from .trie import RuleTrie

SOURCE_KINDS = frozenset(CLASS_NAMES) | {"exception", "proper", "pipeline"}


@dataclass(frozen=True)
class GoldPair:
    word: str
    expected_stem: str
    source_class: str
    note: str = ""


@dataclass
class EvalReport:
    total: int = 0
    passed: int = 0
    failures: list[tuple[str, str, str, Trace]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        lines = [f"{self.passed}/{self.total} gold pairs correct"]
        for word, expected, actual, trace in self.failures:
            lines.append(f"  FAIL {word}: expected {expected}, got {actual}  {trace}")
        return "\n".join(lines)


@dataclass
class FuzzReport:
    samples: int
    matched: int = 0
    mismatches: list[tuple[str, SuffixRule | None, SuffixRule | None]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def parse_gold(content: str) -> list[GoldPair]:
    pairs = []
    errors = []
    for number, line in _content_lines(content):
        body, _, note = line.partition("#")
        fields = body.split()
        if len(fields) != 3:
            errors.append(LineError("wrong-field-count", "expected 'word stem class'", number))
            continue
        word, stem, source = fields
        if not (word.isascii() and word.isalpha()) or not is_letters(stem):
            errors.append(LineError("bad-character", f"{word!r} / {stem!r}", number))
            continue
        if source not in SOURCE_KINDS:
            errors.append(LineError("unknown-class", f"{source!r}", number))
            continue
        pairs.append(GoldPair(word, stem, source, note.strip()))
    if errors:
        raise DataFileError(errors)
    return pairs


def load_gold(path: str | os.PathLike | None = None) -> list[GoldPair]:
    path = Path(path) if path is not None else bundled_data_dir() / GOLD_FILE
    with open(path, encoding="utf-8") as fh:
        try:
            return parse_gold(fh.read())
        except DataFileError as exc:
            raise exc.with_source(str(path)) from None


def oracle_lookup(rules: Iterable[SuffixRule], word: str) -> SuffixRule | None:
    """Longest rule suffix that ends ``word``, found by scanning every rule."""
    best = None
    for rule in rules:
        if word.endswith(rule.suffix) and (best is None or len(rule.suffix) > len(best.suffix)):
            best = rule
    return best


def run_gold(pipeline: Pipeline, pairs: Iterable[GoldPair]) -> EvalReport:
    report = EvalReport()
    for pair in pairs:
        report.total += 1
        actual = pipeline.stem(pair.word)
        if actual == pair.expected_stem:
            report.passed += 1
        else:
            report.failures.append((pair.word, pair.expected_stem, actual,
                                    pipeline.stem_with_trace(pair.word)))
    report.failures.sort(key=lambda f: f[0])
    return report


def random_words(samples: int, max_len: int, seed: int) -> list[str]:
    rng = random.Random(seed)
    letters = string.ascii_lowercase
    return ["".join(rng.choices(letters, k=rng.randint(1, max_len))) for _ in range(samples)]


def fuzz_trie_vs_oracle(trie: RuleTrie, rules: Sequence[SuffixRule], samples: int = 100_000,
                        max_len: int = 12, seed: int = 42,
                        words: Sequence[str] | None = None) -> FuzzReport:
    """Compare trie lookups with :func:`oracle_lookup` on random a-z words.

    Pass ``words`` to reuse one generated sample across several tries.
    """
    if words is None:
        words = random_words(samples, max_len, seed)
    rules = list(rules)
    report = FuzzReport(len(words))
    lookup = trie.lookup_longest
    for word in words:
        got = lookup(word)
        want = oracle_lookup(rules, word)
        if got == want:
            report.matched += 1
        else:
            report.mismatches.append((word, got, want))
    return report
