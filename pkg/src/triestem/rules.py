"""Suffix rewrite rules and the plain-text rule file format.

A rule file holds one rule per line with one to three whitespace-separated
fields::

    # comment
    harness          # protection: matches, rewrites nothing
    s 1              # drop the final s
    lves 3 f         # selves -> self

Field 1 is the suffix to match, field 2 the number of trailing characters to
delete, field 3 the replacement appended afterwards.  Missing trailing fields
mean ``0`` and ``""``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DataFileError, LineError

_LETTERS = re.compile(r"[a-z]+")


def is_letters(text: str) -> bool:
    return _LETTERS.fullmatch(text) is not None


@dataclass(frozen=True)
class SuffixRule:
    suffix: str
    remove_count: int = 0
    replacement: str = ""

    def __post_init__(self):
        if not is_letters(self.suffix):
            raise LineError("bad-character", f"suffix {self.suffix!r} must be non-empty a-z")
        if self.replacement and not is_letters(self.replacement):
            raise LineError("bad-character", f"replacement {self.replacement!r} must be a-z")
        if self.remove_count < 0:
            raise LineError("malformed-integer", f"negative remove count {self.remove_count}")
        if self.remove_count > len(self.suffix):
            raise LineError(
                "remove-exceeds-suffix",
                f"cannot remove {self.remove_count} characters of {self.suffix!r}",
            )

    @property
    def is_protection(self) -> bool:
        return self.remove_count == 0 and not self.replacement

    def apply(self, word: str) -> str:
        return apply_rule(word, self)

    def to_line(self) -> str:
        """Serialize in rule-file form, dropping trailing zero/empty fields."""
        if self.replacement:
            return f"{self.suffix} {self.remove_count} {self.replacement}"
        if self.remove_count:
            return f"{self.suffix} {self.remove_count}"
        return self.suffix

    def __str__(self) -> str:
        return self.to_line()


@dataclass(frozen=True)
class RuleFileEntry:
    line_number: int
    rule: SuffixRule


def apply_rule(word: str, rule: SuffixRule) -> str:
    # Callers get `rule` from a longest-match lookup on `word`.
    assert word.endswith(rule.suffix), (word, rule)
    if rule.remove_count:
        word = word[:-rule.remove_count]
    return word + rule.replacement


def _content_lines(content: str):
    """Yield (line_number, stripped_line) for every non-blank, non-comment line."""
    for number, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield number, line


def parse_rule_line(line: str) -> SuffixRule:
    fields = line.split()
    if not fields:
        raise LineError("empty-line", "expected at least one field")
    if len(fields) > 3:
        raise LineError("too-many-fields", f"expected at most 3 fields, got {len(fields)}")

    suffix = fields[0]
    if not is_letters(suffix):
        raise LineError("bad-character", f"suffix {suffix!r} must be a-z")

    remove_count = 0
    if len(fields) >= 2:
        count = fields[1]
        if not count.isascii() or not count.isdigit():
            raise LineError("malformed-integer", f"remove count {count!r} is not a non-negative integer")
        remove_count = int(count)

    replacement = fields[2] if len(fields) == 3 else ""
    if replacement and not is_letters(replacement):
        raise LineError("bad-character", f"replacement {replacement!r} must be a-z")

    return SuffixRule(suffix, remove_count, replacement)


def parse_rule_file(content: str) -> list[RuleFileEntry]:
    """Parse a whole rule file.

    Every line is checked and all problems are reported together in one
    :class:`DataFileError`; nothing is returned unless the whole file is clean.
    """
    entries: list[RuleFileEntry] = []
    errors: list[LineError] = []
    first_seen: dict[str, int] = {}

    for number, line in _content_lines(content):
        try:
            rule = parse_rule_line(line)
        except LineError as exc:
            errors.append(exc.located(line_number=number))
            continue
        if rule.suffix in first_seen:
            errors.append(LineError(
                "duplicate-suffix",
                f"suffix {rule.suffix!r} already defined on line {first_seen[rule.suffix]}",
                number,
            ))
            continue
        first_seen[rule.suffix] = number
        entries.append(RuleFileEntry(number, rule))

    if errors:
        raise DataFileError(errors)
    return entries


def format_rule_file(rules) -> str:
    return "".join(rule.to_line() + "\n" for rule in rules)
