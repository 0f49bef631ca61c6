"""End-to-end transliteration pipeline.

Text is split into word / separator / foreign spans, each word is pushed
through normalization, dual-use resolution, double-waw merging and
Bizroke insertion (Arabic to Latin) or through the inverse spelling
rules (Latin to Arabic), and everything is stitched back together in
order.  Separators carry digits and punctuation across; foreign spans
are copied verbatim with a warning.

The pipeline is stateless: distinct texts can be processed concurrently
without synchronization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

from .alphabet import (
    DEFAULT_TABLE,
    HAMZA,
    LATIN_VOWELS,
    SEPARATOR_AR2LA,
    SEPARATOR_LA2AR,
    WAW,
    YEH,
    AlphabetTable,
    CharClass,
    Direction,
    Orthography,
    normalize_arabic,
)
from .phonology import (
    has_ambiguous_double_waw,
    insert_bizroke,
    merge_double_waw,
    resolve_dual_use,
)


class TokenKind(Enum):
    WORD = "word"
    SEPARATOR = "separator"
    FOREIGN = "foreign"


class Token(NamedTuple):
    kind: TokenKind
    text: str
    span: tuple[int, int]  # character offsets into the tokenized text


class PipelineWarning(NamedTuple):
    span: tuple[int, int]
    message: str


@dataclass
class PipelineStats:
    words: int = 0
    dual_use_resolutions: int = 0
    bizroke_insertions: int = 0


@dataclass
class TransliterationResult:
    output: str
    warnings: list[PipelineWarning] = field(default_factory=list)
    stats: PipelineStats = field(default_factory=PipelineStats)


_WORD_CLASSES = frozenset([
    CharClass.VOWEL,
    CharClass.CONSONANT,
    CharClass.DUAL_USE,
    CharClass.AUXILIARY,
    CharClass.BIZROKE,
    CharClass.NO_EQUIVALENT,
])


def tokenize(
    text: str,
    orthography: Orthography,
    table: AlphabetTable | None = None,
) -> list[Token]:
    """Split text into maximal runs of word, separator and foreign characters.

    Spans are contiguous and exhaustive: concatenating the token texts in
    order reproduces the input exactly.  Word tokens assume the input is
    already normalized when the orthography is the Arabic-based one.
    """
    table = table or DEFAULT_TABLE
    tokens: list[Token] = []
    start = 0
    current: TokenKind | None = None
    for i, ch in enumerate(text):
        cls = table.classify(ch, orthography)
        if cls in _WORD_CLASSES:
            kind = TokenKind.WORD
        elif cls is CharClass.SEPARATOR:
            kind = TokenKind.SEPARATOR
        else:
            kind = TokenKind.FOREIGN
        if kind is not current:
            if current is not None:
                tokens.append(Token(current, text[start:i], (start, i)))
            current = kind
            start = i
    if current is not None:
        tokens.append(Token(current, text[start:], (start, len(text))))
    return tokens


def _word_ar2la(word: str, table: AlphabetTable) -> tuple[str, list[str], int, bool]:
    """Transliterate one normalized Arabic-script word.

    Returns (text, messages, dual_use_count, bizroke_inserted).
    """
    messages: list[str] = []
    rw = resolve_dual_use(word, table)
    if has_ambiguous_double_waw(rw):
        messages.append(
            "ambiguous double waw after a vowel; the chosen reading may "
            "not match the intended word"
        )
    rw = merge_double_waw(rw)
    rw, inserted = insert_bizroke(rw)

    parts: list[str] = []
    for unit in rw.units:
        if unit.role is CharClass.BIZROKE:
            parts.append("i")
            continue
        mapped = table.map_ar2la(unit.char, unit.role)
        if mapped is None:
            parts.append(unit.char)
            messages.append(f"character {unit.char!r} has no Latin mapping")
        else:
            parts.append(mapped)
    text = "".join(parts)
    if text[:1] in ("ł", "ř"):
        messages.append(f"word-initial {text[0]!r} is unusual in Sorani")
    dual = sum(1 for ch in word if ch in (WAW, YEH))
    return text, messages, dual, inserted


# An epenthetic w between û and a following vowel, and a w fused into a
# following û after a vowel, are not written in the Arabic script: both
# collapse into the وو spelling and are recovered on the way back.
_EPENTHETIC_W = re.compile(r"ûw(?=[aeêîouû])")
_FUSED_W = re.compile(r"(?<=[aeêîouû])wû")


def _word_la2ar(word: str, table: AlphabetTable, digraphs: bool) -> tuple[str, list[str]]:
    """Transliterate one Latin-alphabet word.  Returns (text, messages)."""
    messages: list[str] = []
    w = word.lower()
    if w[:1] in ("ł", "ř"):
        messages.append(f"word-initial {w[0]!r} is unusual in Sorani")
    if digraphs:
        w = w.replace("ll", "ł").replace("rr", "ř")
    w = w.replace("i", "")
    w = _EPENTHETIC_W.sub("û", w)
    w = _FUSED_W.sub("û", w)
    parts: list[str] = []
    if w and w[0] in LATIN_VOWELS:
        parts.append(HAMZA)
    for ch in w:
        mapped = table.map_la2ar(ch)
        if mapped is None:
            parts.append(ch)
            messages.append(f"character {ch!r} is not in the Latin alphabet")
        else:
            parts.append(mapped)
    return "".join(parts), messages


def transliterate_word(
    word: str,
    direction: Direction,
    table: AlphabetTable | None = None,
    digraphs: bool = False,
) -> str:
    """Transliterate a single word; warnings and stats are discarded."""
    table = table or DEFAULT_TABLE
    if direction is Direction.AR2LA:
        text, _, _, _ = _word_ar2la(normalize_arabic(word), table)
        return text
    text, _ = _word_la2ar(word, table, digraphs)
    return text


def transliterate_text(
    text: str,
    direction: Direction,
    table: AlphabetTable | None = None,
    digraphs: bool = False,
) -> TransliterationResult:
    """Transliterate arbitrary text, preserving separators and order.

    Arabic-script input is normalized first; warning spans refer to the
    normalized text.  Foreign spans are copied verbatim with a warning.
    The function is deterministic: identical input gives identical output
    and stats.
    """
    table = table or DEFAULT_TABLE
    if direction is Direction.AR2LA:
        text = normalize_arabic(text)
    result = TransliterationResult(output="")
    separators = (
        SEPARATOR_AR2LA if direction is Direction.AR2LA else SEPARATOR_LA2AR
    )
    out: list[str] = []
    for token in tokenize(text, direction.source, table):
        if token.kind is TokenKind.WORD:
            result.stats.words += 1
            if direction is Direction.AR2LA:
                word, messages, dual, inserted = _word_ar2la(token.text, table)
                result.stats.dual_use_resolutions += dual
                result.stats.bizroke_insertions += int(inserted)
            else:
                word, messages = _word_la2ar(token.text, table, digraphs)
            out.append(word)
            result.warnings.extend(
                PipelineWarning(token.span, m) for m in messages
            )
        elif token.kind is TokenKind.SEPARATOR:
            out.append("".join(separators.get(ch, ch) for ch in token.text))
        else:
            out.append(token.text)
            result.warnings.append(
                PipelineWarning(
                    token.span, f"foreign text {token.text!r} copied verbatim"
                )
            )
    result.output = "".join(out)
    return result
