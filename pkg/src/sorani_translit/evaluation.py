"""Corpus evaluation of the transliteration engine.

A parallel corpus is a pair of UTF-8 text files, one word-aligned line
per text, Arabic-script side and Latin side.  Evaluation runs the engine
over one side and scores exact word matches against the other, broken
down by the challenge each word poses: unwritten Bizroke, the و reading,
the ی reading, and the whole set.  Incorrect Bizroke words are further
split by whether the missed vowel sits in the last syllable or earlier.
"""

from __future__ import annotations

import difflib
import unicodedata
from dataclasses import dataclass, field

from .alphabet import DEFAULT_TABLE, WAW, YEH, AlphabetTable, Direction, Orthography, normalize_arabic
from .phonology import syllabify
from .transliterate import TokenKind, tokenize, transliterate_word


class AlignmentError(Exception):
    """Corpus sides disagree in line or token counts."""

    def __init__(self, line: int, expected: int, found: int, what: str = "tokens"):
        self.line = line
        self.expected = expected
        self.found = found
        super().__init__(
            f"line {line}: expected {expected} {what}, found {found}"
        )


class EncodingError(Exception):
    """A corpus file is not valid UTF-8."""

    def __init__(self, path: str, offset: int):
        self.path = path
        self.offset = offset
        super().__init__(f"{path}: invalid UTF-8 at byte offset {offset}")


@dataclass(frozen=True)
class ParallelCorpus:
    pairs: tuple[tuple[str, str], ...]  # (arabic-script word, latin word)
    source_files: tuple[str, str]


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except UnicodeDecodeError as exc:
        raise EncodingError(path, exc.start) from exc
    return text.lstrip("\ufeff").splitlines()


def load_corpus(
    arabic_path: str,
    latin_path: str,
    table: AlphabetTable | None = None,
) -> ParallelCorpus:
    """Load two line- and token-aligned gold files into word pairs.

    Misalignment is rejected with a diagnostic naming the first bad line,
    never skipped silently.
    """
    table = table or DEFAULT_TABLE
    arabic_lines = _read_lines(arabic_path)
    latin_lines = _read_lines(latin_path)
    if len(arabic_lines) != len(latin_lines):
        raise AlignmentError(
            line=min(len(arabic_lines), len(latin_lines)) + 1,
            expected=len(arabic_lines),
            found=len(latin_lines),
            what="lines",
        )
    pairs: list[tuple[str, str]] = []
    for lineno, (araw, lraw) in enumerate(zip(arabic_lines, latin_lines), 1):
        awords = [
            t.text
            for t in tokenize(normalize_arabic(araw), Orthography.ARABIC, table)
            if t.kind is TokenKind.WORD
        ]
        lwords = [
            t.text
            for t in tokenize(lraw, Orthography.LATIN, table)
            if t.kind is TokenKind.WORD
        ]
        if len(awords) != len(lwords):
            raise AlignmentError(lineno, len(awords), len(lwords))
        pairs.extend(zip(awords, lwords))
    return ParallelCorpus(tuple(pairs), (arabic_path, latin_path))


def format_percent(correct: int, total: int) -> str:
    """Format correct/total as a percentage with two decimals.

    Uses exact integer arithmetic and truncates toward zero, e.g.
    2472/2480 prints as 99.67%.  An empty denominator prints as n/a.
    """
    if total == 0:
        return "n/a"
    basis = (correct * 10000) // total
    return f"{basis // 100}.{basis % 100:02d}%"


@dataclass(frozen=True)
class CategoryScore:
    total: int
    correct: int

    @property
    def incorrect(self) -> int:
        return self.total - self.correct

    @property
    def precision(self) -> str:
        return format_percent(self.correct, self.total)

    @property
    def precision_value(self) -> float | None:
        return None if self.total == 0 else self.correct / self.total


@dataclass
class EvalReport:
    direction: Direction
    overall: CategoryScore
    categories: dict[str, CategoryScore] = field(default_factory=dict)
    bizroke_error_split: dict[str, int] | None = None
    evaluated: int = 0

    @property
    def recall(self) -> str:
        return format_percent(self.evaluated, self.overall.total)

    def to_dict(self) -> dict:
        def score(cs: CategoryScore) -> dict:
            return {
                "total": cs.total,
                "correct": cs.correct,
                "incorrect": cs.incorrect,
                "precision": cs.precision,
            }

        data = {
            "direction": self.direction.value,
            "categories": {name: score(cs) for name, cs in self.categories.items()},
            "overall": score(self.overall),
            "recall": self.recall,
        }
        if self.bizroke_error_split is not None:
            data["bizroke_error_split"] = dict(self.bizroke_error_split)
        return data

    def to_text(self) -> str:
        rows = [*self.categories.items(), ("whole test set", self.overall)]
        width = max(len(name) for name, _ in rows)
        lines = [
            f"{'category'.ljust(width)}  {'total':>7}  {'correct':>7}  "
            f"{'incorrect':>9}  {'precision':>9}"
        ]
        for name, cs in rows:
            lines.append(
                f"{name.ljust(width)}  {cs.total:>7}  {cs.correct:>7}  "
                f"{cs.incorrect:>9}  {cs.precision:>9}"
            )
        if self.bizroke_error_split is not None:
            split = self.bizroke_error_split
            lines.append(
                "Bizroke errors: last syllable "
                f"{split['last_syllable']}, other syllables "
                f"{split['other_syllables']}"
            )
        lines.append(f"recall: {self.recall}")
        return "\n".join(lines)


def _nfc(text: str) -> str:
    return unicodedata.normalize("NFC", text)


def _missed_i_in_last_syllable(hypothesis: str, gold: str) -> bool | None:
    """Locate the "i" the hypothesis failed to produce.

    Returns True when a missed gold "i" lies in the last syllable of the
    gold word, False when missed i's exist only earlier, and None when
    the mismatch is not about "i" at all.
    """
    matcher = difflib.SequenceMatcher(None, hypothesis, gold, autojunk=False)
    missed: list[int] = []
    for tag, _i1, _i2, j1, j2 in matcher.get_opcodes():
        if tag in ("insert", "replace"):
            missed.extend(j for j in range(j1, j2) if gold[j] == "i")
    if not missed:
        return None
    syllables = syllabify(gold)
    if not syllables:
        return False
    last_start = len(gold) - len(syllables[-1])
    return any(j >= last_start for j in missed)


def evaluate_ar2la(
    corpus: ParallelCorpus, table: AlphabetTable | None = None
) -> EvalReport:
    """Score Arabic-to-Latin transliteration against the gold Latin side.

    Category membership comes from the source and gold words only, never
    from the hypothesis.  Words are compared by codepoint equality after
    NFC normalization of both sides.
    """
    table = table or DEFAULT_TABLE
    counts = {
        "Bizroke detection": [0, 0],
        "w/u detection": [0, 0],
        "y/î detection": [0, 0],
    }
    overall = [0, 0]
    split = {"last_syllable": 0, "other_syllables": 0}
    evaluated = 0
    for arabic_word, latin_word in corpus.pairs:
        source = normalize_arabic(arabic_word)
        gold = _nfc(latin_word)
        hypothesis = _nfc(transliterate_word(source, Direction.AR2LA, table))
        evaluated += 1
        ok = hypothesis == gold
        overall[0] += 1
        overall[1] += int(ok)
        members = []
        if "i" in gold:
            members.append("Bizroke detection")
        if WAW in source:
            members.append("w/u detection")
        if YEH in source:
            members.append("y/î detection")
        for name in members:
            counts[name][0] += 1
            counts[name][1] += int(ok)
        if not ok and "i" in gold:
            in_last = _missed_i_in_last_syllable(hypothesis, gold)
            if in_last:
                split["last_syllable"] += 1
            else:
                split["other_syllables"] += 1
    return EvalReport(
        direction=Direction.AR2LA,
        overall=CategoryScore(*overall),
        categories={
            name: CategoryScore(total, correct)
            for name, (total, correct) in counts.items()
        },
        bizroke_error_split=split,
        evaluated=evaluated,
    )


def evaluate_la2ar(
    corpus: ParallelCorpus, table: AlphabetTable | None = None
) -> EvalReport:
    """Score Latin-to-Arabic transliteration against the gold Arabic side."""
    table = table or DEFAULT_TABLE
    overall = [0, 0]
    evaluated = 0
    for arabic_word, latin_word in corpus.pairs:
        gold = _nfc(normalize_arabic(arabic_word))
        hypothesis = _nfc(transliterate_word(latin_word, Direction.LA2AR, table))
        evaluated += 1
        overall[0] += 1
        overall[1] += int(hypothesis == gold)
    return EvalReport(
        direction=Direction.LA2AR,
        overall=CategoryScore(*overall),
        evaluated=evaluated,
    )
