"""Bundled rule, exception and name files, and loading of data directories.

A data directory holds one ``<class>.rules`` file per suffix class plus
``exceptions.txt`` and ``names.txt``.  The bundled directory is small; a
directory with full-size files of the same format can be used in its place.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import DataFileError, LineError
from .lexicon import ExceptionTable, ProperNounSet, load_exceptions, load_proper_nouns
from .rules import SuffixRule, parse_rule_file

# Default pass order: inflections come off before derivational suffixes.
CLASS_NAMES = ("plural", "past", "ing", "ly", "ness", "er", "ity", "ize", "al", "ion", "ic")

EXCEPTIONS_FILE = "exceptions.txt"
NAMES_FILE = "names.txt"
GOLD_FILE = "gold.txt"


@dataclass(frozen=True)
class SuffixClass:
    name: str
    rules: tuple[SuffixRule, ...]

    def __len__(self) -> int:
        return len(self.rules)


@dataclass(frozen=True)
class StemmerData:
    classes: tuple[SuffixClass, ...]
    exceptions: ExceptionTable
    names: ProperNounSet

    def class_named(self, name: str) -> SuffixClass:
        for cls in self.classes:
            if cls.name == name:
                return cls
        raise KeyError(name)


def bundled_data_dir() -> Path:
    return Path(str(resources.files("triestem") / "data"))


def _read(path: Path) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except FileNotFoundError:
        raise DataFileError([LineError("missing-file", "file not found", source=str(path))]) from None
    except UnicodeDecodeError as exc:
        raise DataFileError([LineError("bad-encoding", f"not UTF-8 ({exc.reason})", source=str(path))]) from None


def load_data(data_dir: str | os.PathLike | None = None,
              class_names=CLASS_NAMES) -> StemmerData:
    """Load every file in ``data_dir`` (default: the bundled files).

    Errors from all files are gathered into one :class:`DataFileError`
    whose entries name the file and line; nothing is returned on error.
    """
    root = Path(data_dir) if data_dir is not None else bundled_data_dir()
    errors: list[LineError] = []
    classes = []

    for name in class_names:
        path = root / f"{name}.rules"
        try:
            entries = parse_rule_file(_read(path))
        except DataFileError as exc:
            errors.extend(exc.with_source(str(path)).errors)
            continue
        classes.append(SuffixClass(name, tuple(e.rule for e in entries)))

    exceptions = names = None
    try:
        path = root / EXCEPTIONS_FILE
        exceptions = load_exceptions(_read(path))
    except DataFileError as exc:
        errors.extend(exc.with_source(str(path)).errors)
    try:
        path = root / NAMES_FILE
        names = load_proper_nouns(_read(path))
    except DataFileError as exc:
        errors.extend(exc.with_source(str(path)).errors)

    if errors:
        raise DataFileError(errors)
    return StemmerData(tuple(classes), exceptions, names)


def load_bundled_classes() -> list[SuffixClass]:
    return list(load_data().classes)
