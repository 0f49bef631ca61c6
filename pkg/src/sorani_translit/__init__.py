"""Bidirectional rule-based transliteration for Sorani Kurdish.

Converts text between the Arabic-based and Latin-based orthographies,
resolving the context-dependent readings of و and ی, the double-waw
spelling of û, and the unwritten vowel Bizroke, and ships an evaluation
harness for word-aligned parallel corpora.
"""

from .alphabet import (
    AlphabetTable,
    CharClass,
    DEFAULT_TABLE,
    Direction,
    Orthography,
    UnresolvedDualUseError,
    classify,
    load_override_rules,
    map_char,
    normalize_arabic,
)
from .evaluation import (
    AlignmentError,
    CategoryScore,
    EncodingError,
    EvalReport,
    ParallelCorpus,
    evaluate_ar2la,
    evaluate_la2ar,
    format_percent,
    load_corpus,
)
from .phonology import (
    ResolvedWord,
    Unit,
    insert_bizroke,
    merge_double_waw,
    resolve_dual_use,
    syllabify,
    syllabify_units,
)
from .transliterate import (
    PipelineStats,
    PipelineWarning,
    Token,
    TokenKind,
    TransliterationResult,
    tokenize,
    transliterate_text,
    transliterate_word,
)

__version__ = "0.1.0"

__all__ = [
    "AlphabetTable",
    "AlignmentError",
    "CategoryScore",
    "CharClass",
    "DEFAULT_TABLE",
    "Direction",
    "EncodingError",
    "EvalReport",
    "Orthography",
    "ParallelCorpus",
    "PipelineStats",
    "PipelineWarning",
    "ResolvedWord",
    "Token",
    "TokenKind",
    "TransliterationResult",
    "Unit",
    "UnresolvedDualUseError",
    "classify",
    "evaluate_ar2la",
    "evaluate_la2ar",
    "format_percent",
    "insert_bizroke",
    "load_corpus",
    "load_override_rules",
    "map_char",
    "merge_double_waw",
    "normalize_arabic",
    "resolve_dual_use",
    "syllabify",
    "syllabify_units",
    "tokenize",
    "transliterate_text",
    "transliterate_word",
]
