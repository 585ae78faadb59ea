"""Exceptions table and proper-noun set."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DataFileError, LineError
from .rules import _content_lines, is_letters


@dataclass(frozen=True)
class ExceptionTable:
    """Whole-word mappings (``brought -> bring``) consulted before any pass.

    A word mapped to itself is never stemmed.
    """

    entries: dict[str, str] = field(default_factory=dict)

    def stem(self, word: str) -> str | None:
        return self.entries.get(word)

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class ProperNounSet:
    """Names left unstemmed; membership ignores case."""

    names: frozenset[str] = frozenset()

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.names

    def __len__(self) -> int:
        return len(self.names)


def load_exceptions(content: str) -> ExceptionTable:
    entries: dict[str, str] = {}
    first_seen: dict[str, int] = {}
    errors: list[LineError] = []

    for number, line in _content_lines(content):
        fields = line.split("#", 1)[0].split()
        if len(fields) != 2:
            errors.append(LineError("wrong-field-count", f"expected 'word stem', got {len(fields)} fields", number))
            continue
        word, stem = fields
        if not (is_letters(word) and is_letters(stem)):
            errors.append(LineError("bad-character", f"{line!r} must be lowercase a-z", number))
            continue
        if word in first_seen:
            errors.append(LineError("duplicate-key", f"{word!r} already mapped on line {first_seen[word]}", number))
            continue
        first_seen[word] = number
        entries[word] = stem

    if errors:
        raise DataFileError(errors)
    return ExceptionTable(entries)


def load_proper_nouns(content: str) -> ProperNounSet:
    names: set[str] = set()
    errors: list[LineError] = []

    for number, line in _content_lines(content):
        name = line.split("#", 1)[0].strip()
        if not (name.isascii() and name.isalpha()):
            errors.append(LineError("bad-character", f"name {name!r} must be alphabetic", number))
            continue
        names.add(name.lower())

    if errors:
        raise DataFileError(errors)
    return ProperNounSet(frozenset(names))


def exception_stem(table: ExceptionTable, word: str) -> str | None:
    return table.stem(word)


def is_proper_noun(names: ProperNounSet, word: str) -> bool:
    return word in names
