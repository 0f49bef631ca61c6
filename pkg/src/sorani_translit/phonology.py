"""Phonological disambiguation of Arabic-script Sorani words.

The Arabic script underdetermines three things that the Latin alphabet
writes explicitly:

* و is either the consonant "w" or the vowel "u", and ی is either "y" or
  "î"; which one is meant follows from syllable structure,
* the long vowel "û" is spelled as a double و,
* the short vowel Bizroke ("i") is not written at all.

The functions here recover those distinctions for one word at a time.
They are pure and operate on immutable snapshots, so concurrent use
needs no locking.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .alphabet import (
    DEFAULT_TABLE,
    DOUBLE_WAW,
    DUAL_FORMS,
    HAMZA,
    LATIN_VOWELS,
    WAW,
    YEH,
    AlphabetTable,
    CharClass,
    Orthography,
)


class Unit(NamedTuple):
    """One resolved segment: its source spelling and its phoneme role."""

    char: str            # Arabic-script spelling ("" for an inserted Bizroke)
    role: CharClass      # VOWEL, CONSONANT or BIZROKE


@dataclass(frozen=True)
class ResolvedWord:
    """A word as a sequence of role-tagged units plus its original spelling."""

    units: tuple[Unit, ...]
    source: str

    def latin_skeleton(self, table: AlphabetTable | None = None) -> str:
        """Render the units with dual-use characters in their Latin forms.

        Characters outside the mapping table are kept as-is; this is the
        comparable form used by the detection tests.
        """
        table = table or DEFAULT_TABLE
        parts = []
        for unit in self.units:
            if unit.role is CharClass.BIZROKE:
                parts.append("i")
            elif unit.char in DUAL_FORMS or unit.char == DOUBLE_WAW:
                parts.append(table.map_ar2la(unit.char, unit.role))
            else:
                parts.append(unit.char)
        return "".join(parts)


# Vowels as seen by the detection pass.  Earlier replacements leave Latin
# forms in the working buffer, so both spellings of every vowel appear.
_CONTEXT_VOWELS = frozenset(["i", "î", "u", "û", "ە", "ا", "ۆ", "ێ"])

# Resolution order when a word contains both dual-use characters: the
# yeh pass runs first so that a ی settled as "î" counts as a vowel when
# the waw pass inspects its neighbours.
RESOLUTION_ORDER = (YEH, WAW)


def _detect_target(work: list[str], target: str) -> list[str]:
    """One left-to-right rewriting pass for a single dual-use character.

    Replaces every occurrence of `target` in the buffer with its Latin
    vowel or consonant form:

    * a word that is nothing but the target character is the consonant,
    * target right after the hamza carrier is the word-initial vowel,
    * word-initial target is the consonant,
    * target after a vowel is the consonant,
    * otherwise the following character decides: vowel after it means
      consonant here, anything else (or word end) means vowel.

    Earlier replacements stay in the buffer, so they take part in the
    vowel checks of later positions.  Hamza is left in place; the caller
    strips it once all passes are done.
    """
    vowel_form, consonant_form = DUAL_FORMS[target]
    if "".join(work) == target:
        return [consonant_form]
    out = list(work)
    n = len(out)
    i = 0
    while i < n:
        if out[i] == HAMZA and i + 1 < n and out[i + 1] == target:
            out[i + 1] = vowel_form
            i += 2
            continue
        if out[i] == target:
            if i == 0:
                out[i] = consonant_form
            elif out[i - 1] in _CONTEXT_VOWELS:
                out[i] = consonant_form
            elif i + 1 < n and out[i + 1] in _CONTEXT_VOWELS:
                out[i] = consonant_form
            else:
                out[i] = vowel_form
        i += 1
    return out


def resolve_dual_use(word: str, table: AlphabetTable | None = None) -> ResolvedWord:
    """Assign vowel/consonant roles to every character of a normalized word.

    Words without dual-use characters pass through with their table
    classification.  The hamza carrier never survives into the result.
    """
    table = table or DEFAULT_TABLE
    work = list(word)
    for target in RESOLUTION_ORDER:
        work = _detect_target(work, target)

    units = []
    for src, resolved in zip(word, work):
        if src == HAMZA:
            continue
        if src in DUAL_FORMS:
            role = (
                CharClass.VOWEL
                if resolved in ("u", "î")
                else CharClass.CONSONANT
            )
            units.append(Unit(src, role))
        else:
            cls = table.classify(src, Orthography.ARABIC)
            role = CharClass.VOWEL if cls is CharClass.VOWEL else CharClass.CONSONANT
            units.append(Unit(src, role))
    return ResolvedWord(tuple(units), word)


def has_ambiguous_double_waw(rw: ResolvedWord) -> bool:
    """True when the word contains a vowel + وو + consonant stretch.

    That surface shape has more than one legitimate reading (w+u, w+û or
    w+w+i) and no rule separates them, so the pipeline flags it instead
    of guessing beyond the deterministic resolution.
    """
    units = rw.units
    for i in range(len(units) - 3):
        if (
            units[i].role is CharClass.VOWEL
            and units[i + 1] == Unit(WAW, CharClass.CONSONANT)
            and units[i + 2] == Unit(WAW, CharClass.VOWEL)
            and units[i + 3].role is CharClass.CONSONANT
        ):
            return True
    return False


def merge_double_waw(rw: ResolvedWord) -> ResolvedWord:
    """Fuse (u, w) pairs spelled وو into the long vowel û.

    After fusing, a û that ends up directly before another vowel gets a
    consonant w re-inserted between them, since no two vowels may touch:
    the spelling وو before a written vowel stands for û plus an unwritten
    glide.
    """
    units = rw.units
    merged: list[Unit] = []
    i = 0
    while i < len(units):
        if (
            i + 1 < len(units)
            and units[i] == Unit(WAW, CharClass.VOWEL)
            and units[i + 1] == Unit(WAW, CharClass.CONSONANT)
        ):
            merged.append(Unit(DOUBLE_WAW, CharClass.VOWEL))
            i += 2
        else:
            merged.append(units[i])
            i += 1

    out: list[Unit] = []
    for j, unit in enumerate(merged):
        out.append(unit)
        if (
            unit.char == DOUBLE_WAW
            and j + 1 < len(merged)
            and merged[j + 1].role is CharClass.VOWEL
        ):
            out.append(Unit(WAW, CharClass.CONSONANT))
    return ResolvedWord(tuple(out), rw.source)


# Letters eligible for the second insertion site: a bare final cluster
# ending in a liquid (agir, bîwir, bawir ...) hides a Bizroke, whereas
# obstruent- or nasal-final clusters (kurd, deng ...) are ordinary codas.
_LIQUIDS = frozenset(["ر", "ڕ", "ل", "ڵ"])
_GLIDES = frozenset([WAW, YEH])


def insert_bizroke(rw: ResolvedWord) -> tuple[ResolvedWord, bool]:
    """Insert at most one unwritten "i" where syllable structure demands it.

    Two sites are recognised, tried in order:

    1. a word starting with two consonants takes the vowel between them,
       unless the second consonant is y or w (those clusters are real
       onsets: kwêr, dyar);
    2. failing that, a word ending in consonant + liquid takes the vowel
       inside that final cluster.

    Bizroke in any other position is not recoverable from the spelling
    and is deliberately left out; kirdin therefore comes out as kirdn.
    Returns the (possibly unchanged) word and whether an insertion
    happened.
    """
    units = list(rw.units)
    site = None
    if (
        len(units) >= 2
        and units[0].role is CharClass.CONSONANT
        and units[1].role is CharClass.CONSONANT
        and units[1].char not in _GLIDES
    ):
        site = 1
    elif (
        len(units) >= 2
        and units[-1].role is CharClass.CONSONANT
        and units[-2].role is CharClass.CONSONANT
        and units[-1].char in _LIQUIDS
    ):
        site = len(units) - 1
    if site is None:
        return rw, False
    units.insert(site, Unit("", CharClass.BIZROKE))
    return ResolvedWord(tuple(units), rw.source), True


# --- Syllabification (validation helper) ------------------------------------

SYLLABLE_SHAPES = frozenset(["V", "VC", "VCC", "CV", "CVC", "CVCC"])


def _segment(is_vowel: list[bool]) -> list[int] | None:
    """Split a vowel/consonant pattern into syllable lengths.

    Onsets take at most one consonant and are filled greedily; codas take
    at most two.  Returns None when no split exists (no vowel, adjacent
    vowels, or an unsplittable cluster).
    """
    nuclei = [i for i, v in enumerate(is_vowel) if v]
    if not nuclei:
        return None
    if nuclei[0] > 1:
        return None
    lengths = []
    prev_start = 0
    for k in range(len(nuclei) - 1):
        gap = nuclei[k + 1] - nuclei[k] - 1
        if gap == 0 or gap > 3:
            return None
        onset = 1
        coda = gap - onset
        boundary = nuclei[k] + 1 + coda
        lengths.append(boundary - prev_start)
        prev_start = boundary
    tail = len(is_vowel) - 1 - nuclei[-1]
    if tail > 2:
        return None
    lengths.append(len(is_vowel) - prev_start)
    return lengths


def syllabify(word: str) -> list[str] | None:
    """Greedily syllabify a Latin-alphabet word; None when it has no parse."""
    pattern = [ch in LATIN_VOWELS for ch in word]
    lengths = _segment(pattern)
    if lengths is None:
        return None
    out = []
    pos = 0
    for n in lengths:
        out.append(word[pos:pos + n])
        pos += n
    return out


def syllabify_units(units: tuple[Unit, ...]) -> list[tuple[Unit, ...]] | None:
    """Syllabify a resolved word; Bizroke counts as a nucleus."""
    pattern = [u.role is not CharClass.CONSONANT for u in units]
    lengths = _segment(pattern)
    if lengths is None:
        return None
    out = []
    pos = 0
    for n in lengths:
        out.append(tuple(units[pos:pos + n]))
        pos += n
    return out
