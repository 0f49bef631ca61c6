"""Character inventory of the two Sorani Kurdish orthographies.

Sorani Kurdish is written either in an Arabic-based script or in a
Latin-based alphabet.  This module owns the letter inventories of both,
the classification of every character (vowel, consonant, dual-use, ...),
the bidirectional mapping table between them, and the Unicode
normalization applied to Arabic-script input before anything else looks
at it.

Everything here is immutable after construction and safe to share
between threads.
"""

from __future__ import annotations

import re
import unicodedata
from enum import Enum


class Orthography(Enum):
    """Which of the two Sorani writing systems a piece of text is in."""

    ARABIC = "arabic"
    LATIN = "latin"


class Direction(Enum):
    """Transliteration direction between the two orthographies."""

    AR2LA = "ar2la"
    LA2AR = "la2ar"

    @property
    def source(self) -> Orthography:
        return Orthography.ARABIC if self is Direction.AR2LA else Orthography.LATIN

    @property
    def target(self) -> Orthography:
        return Orthography.LATIN if self is Direction.AR2LA else Orthography.ARABIC


class CharClass(Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"
    DUAL_USE = "dual_use"          # Arabic-script waw/yeh: vowel or consonant by context
    AUXILIARY = "auxiliary"        # the hamza carrier that fronts word-initial vowels
    BIZROKE = "bizroke"            # Latin "i"; never written in the Arabic script
    NO_EQUIVALENT = "no_equivalent"  # Arabic-script letters with no native Latin letter
    SEPARATOR = "separator"
    FOREIGN = "foreign"


class UnresolvedDualUseError(ValueError):
    """Raised when a dual-use character is mapped without a resolved role."""


# Arabic-script characters with special behaviour.
HAMZA = "ئ"        # ئ  carrier before word-initial vowels, never a sound of its own
WAW = "و"          # و  "w" or "u" depending on context
YEH = "ی"          # ی  "y" or "î" depending on context
DOUBLE_WAW = WAW + WAW  # وو the long vowel "û"
BIZROKE = "i"

# Strict one-to-one letter pairs (Arabic form -> Latin form).
ONE_TO_ONE = {
    "ا": "a",   # U+0627 alef
    "ە": "e",   # U+06D5 ae
    "ۆ": "o",   # U+06C6 oe
    "ێ": "ê",   # U+06CE yeh with small v above
    "ب": "b",   # U+0628 beh
    "پ": "p",   # U+067E peh
    "ت": "t",   # U+062A teh
    "ج": "c",   # U+062C jeem
    "چ": "ç",   # U+0686 tcheh
    "خ": "x",   # U+062E khah
    "د": "d",   # U+062F dal
    "ر": "r",   # U+0631 reh
    "ڕ": "ř",   # U+0695 reh with small v below (trilled r)
    "ز": "z",   # U+0632 zain
    "ژ": "j",   # U+0698 jeh
    "س": "s",   # U+0633 seen
    "ش": "ş",   # U+0634 sheen
    "ف": "f",   # U+0641 feh
    "ڤ": "v",   # U+06A4 veh
    "ق": "q",   # U+0642 qaf
    "ک": "k",   # U+06A9 keheh
    "گ": "g",   # U+06AF gaf
    "ل": "l",   # U+0644 lam
    "ڵ": "ł",   # U+06B5 lam with small v (velarized l)
    "م": "m",   # U+0645 meem
    "ن": "n",   # U+0646 noon
    "ه": "h",   # U+0647 heh
}

ARABIC_VOWELS = frozenset("اەۆێ")

# Arabic-script letters without a Latin counterpart.  The first three are
# native to Kurdish usage; the rest occur in Arabic loanwords and fold to
# the nearest Kurdish sound.  All of these can be reassigned through an
# override file.
NO_EQUIVALENT_DEFAULTS = {
    "ح": "ḧ",   # U+062D hah
    "غ": "ẍ",   # U+063A ghain
    "ع": "'",   # U+0639 ain
}
LOAN_DEFAULTS = {
    "ث": "s",   # U+062B theh
    "ذ": "z",   # U+0630 thal
    "ص": "s",   # U+0635 sad
    "ض": "z",   # U+0636 dad
    "ط": "t",   # U+0637 tah
    "ظ": "z",   # U+0638 zah
}

LATIN_VOWELS = frozenset("aeêiîouû")
LATIN_CONSONANTS = frozenset("bcçdfghjklłmnpqrřsştvwxyz") | frozenset("ḧẍ'")

# The vowel/consonant readings of the two dual-use characters.
DUAL_FORMS = {
    WAW: ("u", "w"),
    YEH: ("î", "y"),
}

# Digits and punctuation converted alongside letters.
_DIGITS_AR2LA = {chr(0x06F0 + i): str(i) for i in range(10)}   # ۰..۹
_DIGITS_AR2LA.update({chr(0x0660 + i): str(i) for i in range(10)})  # ٠..٩ accepted too
_PUNCT_AR2LA = {"،": ",", "؟": "?", "؛": ";"}
SEPARATOR_AR2LA = {**_DIGITS_AR2LA, **_PUNCT_AR2LA}
SEPARATOR_LA2AR = {str(i): chr(0x06F0 + i) for i in range(10)}
SEPARATOR_LA2AR.update({",": "،", "?": "؟", ";": "؛"})


def _is_arabic_script(text: str) -> bool:
    return all(
        0x0600 <= ord(ch) <= 0x06FF or 0x0750 <= ord(ch) <= 0x077F
        for ch in text
    )


class AlphabetTable:
    """The bidirectional letter mapping plus per-character classification.

    Instances are immutable; `with_overrides` builds a modified copy.
    """

    def __init__(self, extra_rules: list[tuple[str, str]] | None = None):
        ar2la: dict[str, str] = {**ONE_TO_ONE, **NO_EQUIVALENT_DEFAULTS, **LOAN_DEFAULTS}
        la2ar: dict[str, str] = {v: k for k, v in ONE_TO_ONE.items()}
        la2ar.update({v: k for k, v in NO_EQUIVALENT_DEFAULTS.items()})
        la2ar.update({"w": WAW, "u": WAW, "y": YEH, "î": YEH})
        la2ar["û"] = DOUBLE_WAW
        la2ar[BIZROKE] = ""
        no_equiv = set(NO_EQUIVALENT_DEFAULTS) | set(LOAN_DEFAULTS)

        # Later rules shadow earlier ones; the side a rule applies to is
        # inferred from the script of its source text.
        for source, target in extra_rules or []:
            if _is_arabic_script(source):
                ar2la[source] = target
                if len(source) == 1 and source not in ONE_TO_ONE:
                    no_equiv.add(source)
            else:
                la2ar[source.lower()] = target

        self._ar2la = ar2la
        self._la2ar = la2ar
        self._no_equivalent = frozenset(no_equiv)
        self._arabic_letters = (
            frozenset(k for k in ar2la if len(k) == 1) | {HAMZA, WAW, YEH}
        )
        self._latin_letters = frozenset(k for k in la2ar if len(k) == 1)

    @property
    def arabic_letters(self) -> frozenset[str]:
        return self._arabic_letters

    @property
    def latin_letters(self) -> frozenset[str]:
        return self._latin_letters

    @property
    def no_equivalent_letters(self) -> frozenset[str]:
        return self._no_equivalent

    def classify(self, c: str, orthography: Orthography) -> CharClass:
        """Classify a single character of the given orthography."""
        if orthography is Orthography.ARABIC:
            if c == HAMZA:
                return CharClass.AUXILIARY
            if c in DUAL_FORMS:
                return CharClass.DUAL_USE
            if c in ARABIC_VOWELS:
                return CharClass.VOWEL
            if c in self._no_equivalent:
                return CharClass.NO_EQUIVALENT
            if c in self._arabic_letters:
                return CharClass.CONSONANT
        else:
            low = c.lower()
            if low == BIZROKE:
                return CharClass.BIZROKE
            if low in LATIN_VOWELS:
                return CharClass.VOWEL
            if low in self._latin_letters:
                return CharClass.CONSONANT
        if c.isspace():
            return CharClass.SEPARATOR
        cat = unicodedata.category(c)
        if cat.startswith(("P", "S", "N", "Z")):
            return CharClass.SEPARATOR
        return CharClass.FOREIGN

    def map_ar2la(self, char: str, role: CharClass | None = None) -> str | None:
        """Map an Arabic-script character (or the وو digraph) to Latin.

        Dual-use characters need `role` resolved to VOWEL or CONSONANT
        first; passing them unresolved raises UnresolvedDualUseError.
        Returns None for characters outside the table.
        """
        if char == DOUBLE_WAW:
            return "û"
        if char in DUAL_FORMS:
            vowel_form, consonant_form = DUAL_FORMS[char]
            if role is CharClass.VOWEL:
                return vowel_form
            if role is CharClass.CONSONANT:
                return consonant_form
            raise UnresolvedDualUseError(
                f"dual-use character {char!r} mapped without a resolved role"
            )
        if char == HAMZA:
            return ""
        return self._ar2la.get(char)

    def map_la2ar(self, letter: str) -> str | None:
        """Map a Latin letter to its Arabic-script spelling (î/û/i included)."""
        return self._la2ar.get(letter.lower())

    def with_overrides(self, rules: list[tuple[str, str]]) -> "AlphabetTable":
        """Return a copy of this table with the given mapping rules applied."""
        return AlphabetTable(extra_rules=list(self._iter_rules()) + list(rules))

    def _iter_rules(self):
        # Reconstruct only the rules that differ from the built-in defaults.
        base = AlphabetTable()
        for k, v in self._ar2la.items():
            if base._ar2la.get(k) != v:
                yield (k, v)
        for k, v in self._la2ar.items():
            if base._la2ar.get(k) != v:
                yield (k, v)


DEFAULT_TABLE = AlphabetTable()


def load_override_rules(path: str) -> list[tuple[str, str]]:
    """Parse an override mapping file.

    One rule per line, `source<TAB>target`; `#` starts a comment; blank
    lines are skipped.  Later rules shadow earlier ones.
    """
    rules: list[tuple[str, str]] = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, 1):
            line = raw.split("#", 1)[0].rstrip("\n\r")
            if not line.strip():
                continue
            parts = line.split("\t")
            if len(parts) != 2 or not parts[0]:
                raise ValueError(f"{path}:{lineno}: expected 'source<TAB>target'")
            rules.append((parts[0], parts[1]))
    return rules


def classify(c: str, orthography: Orthography, table: AlphabetTable | None = None) -> CharClass:
    """Classify a single character (module-level convenience)."""
    return (table or DEFAULT_TABLE).classify(c, orthography)


def map_char(
    c: str,
    role: CharClass | None = None,
    direction: Direction = Direction.AR2LA,
    table: AlphabetTable | None = None,
) -> str | None:
    """Map one character across orthographies; see AlphabetTable methods."""
    table = table or DEFAULT_TABLE
    if direction is Direction.AR2LA:
        return table.map_ar2la(c, role)
    return table.map_la2ar(c)


# --- Unicode normalization of Arabic-script input ---------------------------
#
# Keyboards and legacy converters leave three recurring artefacts in
# Kurdish text: the Arabic letters yeh (U+064A) and kaf (U+0643) where the
# Kurdish codepoints U+06CC / U+06A9 are meant, and zero-width non-joiners
# or en dashes used to force a word-final heh (U+0647, the consonant "h")
# into its non-connecting shape so it is not misread as U+06D5 ("e").  The
# two heh-like letters have distinct codepoints, so once the marker is
# stripped no guessing is needed.

_CONFUSABLES = str.maketrans({"ي": YEH, "ك": "ک"})

_WORD_CHARS = "".join(sorted(
    set(ONE_TO_ONE) | set(NO_EQUIVALENT_DEFAULTS) | set(LOAN_DEFAULTS)
    | {HAMZA, WAW, YEH, "ي", "ك"}
))
# En dashes after a heh are the non-joining marker only at a word boundary.
_HEH_DASH = re.compile("ه\\u2013+(?![%s])" % _WORD_CHARS)


def normalize_arabic(text: str) -> str:
    """Fold confusable codepoints and strip joiner-control markers.

    Idempotent and length-non-increasing; characters the function does
    not know about pass through unchanged.
    """
    text = text.replace("\u200C", "")
    text = _HEH_DASH.sub("ه", text)
    return text.translate(_CONFUSABLES)
