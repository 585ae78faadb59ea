"""Rule-based English stemmer with suffix rules in reverse character tries.

Each suffix class (plural, past, -ing, ...) is one independently switchable
pass; within a pass the longest matching suffix rule wins.

>>> from triestem import Pipeline
>>> Pipeline.default().stem("pelves")
'pelvis'
"""

from .errors import DataFileError, LineError
from .lexicon import ExceptionTable, ProperNounSet, load_exceptions, load_proper_nouns
from .pipeline import ConfigError, PassRecord, Pipeline, StemmerConfig, Trace
from .rules import RuleFileEntry, SuffixRule, apply_rule, parse_rule_file, parse_rule_line
from .stock import CLASS_NAMES, StemmerData, SuffixClass, load_bundled_classes, load_data
from .trie import DuplicateSuffixError, RuleTrie

__all__ = [
    "CLASS_NAMES",
    "ConfigError",
    "DataFileError",
    "DuplicateSuffixError",
    "ExceptionTable",
    "LineError",
    "PassRecord",
    "Pipeline",
    "ProperNounSet",
    "RuleFileEntry",
    "RuleTrie",
    "StemmerConfig",
    "StemmerData",
    "SuffixClass",
    "SuffixRule",
    "Trace",
    "apply_rule",
    "load_bundled_classes",
    "load_data",
    "load_exceptions",
    "load_proper_nouns",
    "parse_rule_file",
    "parse_rule_line",
]

__version__ = "0.1.0"
