"""Multi-pass stemmer assembled from per-class tries and the lexicon."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .lexicon import ExceptionTable, ProperNounSet
from .rules import SuffixRule
from .stock import CLASS_NAMES, StemmerData, SuffixClass, load_data
from .trie import RuleTrie
from ._fastpath import compile_dispatch, stem_passes as _stem_passes


class ConfigError(ValueError):
    def __init__(self, kind: str, detail: str):
        self.kind = kind
        super().__init__(f"{kind}: {detail}")


@dataclass(frozen=True)
class StemmerConfig:
    enabled_passes: tuple[str, ...] = CLASS_NAMES
    min_stem_length: int = 3
    apply_exceptions: bool = True
    apply_proper_nouns: bool = True

    def __post_init__(self):
        object.__setattr__(self, "enabled_passes", tuple(self.enabled_passes))
        seen = set()
        for name in self.enabled_passes:
            if name in seen:
                raise ConfigError("duplicate-pass", f"pass {name!r} listed twice")
            seen.add(name)
        if not isinstance(self.min_stem_length, int) or self.min_stem_length < 1:
            raise ConfigError("bad-min-stem", f"min_stem_length must be >= 1, got {self.min_stem_length!r}")

    @classmethod
    def light(cls, **kwargs) -> "StemmerConfig":
        """Plural-only configuration."""
        return cls(enabled_passes=("plural",), **kwargs)


@dataclass(frozen=True)
class PassRecord:
    name: str
    input: str
    output: str
    rule: SuffixRule | None = None
    suppressed: bool = False

    @property
    def fired(self) -> bool:
        return self.rule is not None and not self.suppressed

    def __str__(self) -> str:
        if self.rule is None:
            return f"{self.name}: no match"
        if self.suppressed:
            return f"{self.name}: matched {self.rule.to_line()!r}, suppressed by length guard"
        return f"{self.name}: matched {self.rule.to_line()!r} -> {self.output}"


@dataclass(frozen=True)
class Trace:
    word: str
    stem: str
    passes: tuple[PassRecord, ...] = ()
    # "proper", "exception", "passthrough" or None when the passes ran
    shortcut: str | None = None

    def used(self, name: str) -> bool:
        return any(rec.name == name and rec.fired for rec in self.passes)

    def __str__(self) -> str:
        if self.shortcut:
            return f"{self.word} -> {self.stem} [{self.shortcut}]"
        steps = "; ".join(str(rec) for rec in self.passes) or "no passes"
        return f"{self.word} -> {self.stem} [{steps}]"


class Pipeline:
    """An immutable, configured stemmer.

    >>> p = Pipeline.default()
    >>> p.stem("selves"), p.stem("pelves"), p.stem("randomized")
    ('self', 'pelvis', 'random')
    """

    def __init__(self, config: StemmerConfig, tries: Sequence[tuple[str, RuleTrie]],
                 exceptions: ExceptionTable, proper_nouns: ProperNounSet):
        self.config = config
        self.tries = tuple(tries)
        self.exceptions = exceptions
        self.proper_nouns = proper_nouns
        # Precomputed views for the hot path in stem().  Proper nouns map to
        # themselves and take precedence over exceptions.
        shortcuts: dict[str, str] = {}
        if config.apply_exceptions:
            shortcuts.update(exceptions.entries)
        if config.apply_proper_nouns:
            shortcuts.update((name, name) for name in proper_nouns.names)
        self._shortcuts = shortcuts
        self._min = config.min_stem_length

    @cached_property
    def _dispatch(self) -> list[dict[str, tuple]]:
        return compile_dispatch([trie for _, trie in self.tries])

    @classmethod
    def build(cls, config: StemmerConfig, classes: Iterable[SuffixClass],
              exceptions: ExceptionTable | None = None,
              names: ProperNounSet | None = None) -> "Pipeline":
        by_name: dict[str, SuffixClass] = {}
        for cls_ in classes:
            by_name[cls_.name] = cls_
        tries = []
        for name in config.enabled_passes:
            if name not in by_name:
                raise ConfigError("unknown-pass", f"no suffix class named {name!r}")
            tries.append((name, RuleTrie(by_name[name].rules)))
        return cls(config, tries, exceptions or ExceptionTable(), names or ProperNounSet())

    @classmethod
    def from_data(cls, data: StemmerData, config: StemmerConfig | None = None) -> "Pipeline":
        return cls.build(config or StemmerConfig(), data.classes, data.exceptions, data.names)

    @classmethod
    def default(cls, config: StemmerConfig | None = None) -> "Pipeline":
        return cls.from_data(_bundled(), config)

    @property
    def pass_names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.tries)

    def stem(self, word: str) -> str:
        return _stem_passes(word, self._shortcuts, self._dispatch, self._min)

    __call__ = stem

    def stem_with_trace(self, word: str) -> Trace:
        form = word.lower()
        if not (form.isascii() and form.isalpha()):
            return Trace(word, word, shortcut="passthrough")
        if self.config.apply_proper_nouns and form in self.proper_nouns:
            return Trace(word, form, shortcut="proper")
        if self.config.apply_exceptions:
            hit = self.exceptions.stem(form)
            if hit is not None:
                return Trace(word, hit, shortcut="exception")

        records = []
        for name, trie in self.tries:
            rule = trie.lookup_longest(form)
            if rule is None:
                records.append(PassRecord(name, form, form))
                continue
            retained = len(form) - rule.remove_count
            if not rule.is_protection and retained < self.config.min_stem_length:
                records.append(PassRecord(name, form, form, rule, suppressed=True))
                continue
            out = rule.apply(form)
            assert rule.is_protection or retained >= self.config.min_stem_length
            records.append(PassRecord(name, form, out, rule))
            form = out
        return Trace(word, form, tuple(records))

    def stem_all(self, words: Iterable[str]) -> list[str]:
        stem = self.stem
        return [stem(w) for w in words]

    def max_hops(self, word: str) -> int:
        """Upper bound on trie hops for ``word``: its length times the pass count."""
        return len(word) * len(self.tries)


_BUNDLED: StemmerData | None = None


def _bundled() -> StemmerData:
    global _BUNDLED
    if _BUNDLED is None:
        _BUNDLED = load_data()
    return _BUNDLED


def build(config: StemmerConfig, classes: Iterable[SuffixClass],
          exceptions: ExceptionTable | None = None,
          names: ProperNounSet | None = None) -> Pipeline:
    return Pipeline.build(config, classes, exceptions, names)


def stem(pipeline: Pipeline, word: str) -> str:
    return pipeline.stem(word)


def stem_with_trace(pipeline: Pipeline, word: str) -> Trace:
    return pipeline.stem_with_trace(word)
