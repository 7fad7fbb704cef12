"""Uzbek Cyrillic / Latin / New Latin transliteration."""

from ._core import (
    Alphabet,
    CaseClass,
    DataError,
    Transliterator,
    classify_case,
    evaluate,
    micro_f1,
    normalize_apostrophes,
    rule_group_count,
    rule_table_dump,
    tokenize,
    transliterate,
)

__all__ = [
    "Alphabet",
    "CaseClass",
    "DataError",
    "Transliterator",
    "classify_case",
    "evaluate",
    "micro_f1",
    "normalize_apostrophes",
    "rule_group_count",
    "rule_table_dump",
    "tokenize",
    "transliterate",
]
