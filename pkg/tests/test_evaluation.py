"""Corpus loading and evaluation-report checks."""

import json

import pytest

from sorani_translit import (
    AlignmentError,
    Direction,
    EncodingError,
    evaluate_ar2la,
    evaluate_la2ar,
    format_percent,
    load_corpus,
    transliterate_word,
)
from sorani_translit.evaluation import CategoryScore, EvalReport, ParallelCorpus


def write_corpus(tmp_path, arabic_lines, latin_lines):
    apath = tmp_path / "gold.abo"
    lpath = tmp_path / "gold.lbo"
    apath.write_text("\n".join(arabic_lines), encoding="utf-8")
    lpath.write_text("\n".join(latin_lines), encoding="utf-8")
    return str(apath), str(lpath)


# --- loader ------------------------------------------------------------------

def test_single_pair(tmp_path):
    corpus = load_corpus(*write_corpus(tmp_path, ["ئاگر"], ["agir"]))
    assert corpus.pairs == (("ئاگر", "agir"),)


def test_empty_files(tmp_path):
    corpus = load_corpus(*write_corpus(tmp_path, [], []))
    assert corpus.pairs == ()


def test_tokens_align_by_position(tmp_path):
    corpus = load_corpus(
        *write_corpus(tmp_path, ["رۆژ باش."], ["roj baş."])
    )
    assert corpus.pairs == (("رۆژ", "roj"), ("باش", "baş"))


def test_line_count_mismatch_is_reported(tmp_path):
    paths = write_corpus(tmp_path, ["ئاگر", "رۆژ"], ["agir", "roj", "baş"])
    with pytest.raises(AlignmentError) as err:
        load_corpus(*paths)
    assert err.value.line == 3


def test_token_count_mismatch_names_the_line(tmp_path):
    paths = write_corpus(tmp_path, ["ئاگر", "رۆژ باش"], ["agir", "roj"])
    with pytest.raises(AlignmentError) as err:
        load_corpus(*paths)
    assert err.value.line == 2
    assert err.value.expected == 2
    assert err.value.found == 1


def test_invalid_utf8_is_an_encoding_error(tmp_path):
    apath = tmp_path / "gold.abo"
    apath.write_bytes("ئاگر ".encode("utf-8") + b"\xff\xfe")
    lpath = tmp_path / "gold.lbo"
    lpath.write_text("agir", encoding="utf-8")
    with pytest.raises(EncodingError) as err:
        load_corpus(str(apath), str(lpath))
    assert err.value.offset > 0


def test_bom_is_stripped(tmp_path):
    apath = tmp_path / "gold.abo"
    apath.write_text("\ufeffئاگر", encoding="utf-8")
    lpath = tmp_path / "gold.lbo"
    lpath.write_text("agir", encoding="utf-8")
    corpus = load_corpus(str(apath), str(lpath))
    assert corpus.pairs == (("ئاگر", "agir"),)


# --- percent formatting ------------------------------------------------------

@pytest.mark.parametrize(
    ("correct", "total", "expected"),
    [
        (721, 1861, "38.74%"),
        (2472, 2480, "99.67%"),
        (4808, 4850, "99.13%"),
        (5779, 6980, "82.79%"),
        (1, 1, "100.00%"),
        (0, 3, "0.00%"),
    ],
)
def test_format_percent(correct, total, expected):
    assert format_percent(correct, total) == expected


def test_zero_denominator_is_flagged():
    assert format_percent(0, 0) == "n/a"


# --- evaluation --------------------------------------------------------------

def test_all_correct_corpus_scores_100(tmp_path):
    corpus = load_corpus(
        *write_corpus(tmp_path, ["ئاگر برا", "هاوین"], ["agir bira", "hawîn"])
    )
    report = evaluate_ar2la(corpus)
    assert report.overall == CategoryScore(total=3, correct=3)
    for score in report.categories.values():
        assert score.incorrect == 0
    assert report.recall == "100.00%"


def test_category_membership_comes_from_source_and_gold(tmp_path):
    corpus = load_corpus(
        *write_corpus(
            tmp_path,
            ["هاوین", "برا", "رۆژ", "کردن"],
            ["hawîn", "bira", "roj", "kirdin"],
        )
    )
    report = evaluate_ar2la(corpus)
    categories = report.categories
    # hawîn carries both dual-use characters; bira and kirdin carry Bizroke
    assert categories["w/u detection"].total == 1
    assert categories["y/î detection"].total == 1
    assert categories["Bizroke detection"].total == 2
    assert report.overall.total == 4
    # kirdin comes out as kirdn: one Bizroke error, in the last syllable
    assert report.overall.correct == 3
    assert report.bizroke_error_split == {
        "last_syllable": 1,
        "other_syllables": 0,
    }


def test_legacy_codepoints_in_the_corpus_are_normalized(tmp_path):
    # Arabic yeh/kaf spellings still count for the ی category and score
    corpus = load_corpus(*write_corpus(tmp_path, ["يەك"], ["yek"]))
    report = evaluate_ar2la(corpus)
    assert report.overall == CategoryScore(total=1, correct=1)
    assert report.categories["y/î detection"].total == 1


def test_bizroke_error_split_by_syllable_position(tmp_path):
    # çirij misses its second vowel in the last syllable; kirdinewe misses
    # one in the middle of the word
    corpus = load_corpus(
        *write_corpus(tmp_path, ["چرژ", "کردنەوە"], ["çirij", "kirdinewe"])
    )
    report = evaluate_ar2la(corpus)
    assert report.overall.correct == 0
    assert report.bizroke_error_split == {
        "last_syllable": 1,
        "other_syllables": 1,
    }


def test_la2ar_evaluation(tmp_path):
    latin = ["roj", "rawêj", "rêga"]
    arabic = [transliterate_word(w, Direction.LA2AR) for w in latin]
    corpus = load_corpus(*write_corpus(tmp_path, [" ".join(arabic)], [" ".join(latin)]))
    report = evaluate_la2ar(corpus)
    assert report.overall == CategoryScore(total=3, correct=3)
    assert report.overall.precision == "100.00%"


def test_empty_corpus_report_is_degenerate():
    report = evaluate_la2ar(ParallelCorpus((), ("a", "b")))
    assert report.overall.total == 0
    assert report.overall.precision == "n/a"


# --- report rendering --------------------------------------------------------

def make_report():
    return EvalReport(
        direction=Direction.AR2LA,
        overall=CategoryScore(6980, 5779),
        categories={
            "Bizroke detection": CategoryScore(1861, 721),
            "w/u detection": CategoryScore(2480, 2472),
            "y/î detection": CategoryScore(4850, 4808),
        },
        bizroke_error_split={"last_syllable": 286, "other_syllables": 854},
        evaluated=6980,
    )


def test_text_report_prints_expected_percentages():
    text = make_report().to_text()
    for needle in ("38.74%", "99.67%", "99.13%", "82.79%", "286", "854"):
        assert needle in text


def test_json_report_is_machine_readable():
    data = json.loads(json.dumps(make_report().to_dict(), ensure_ascii=False))
    assert data["overall"] == {
        "total": 6980, "correct": 5779, "incorrect": 1201, "precision": "82.79%",
    }
    assert data["categories"]["Bizroke detection"]["precision"] == "38.74%"
    assert data["bizroke_error_split"] == {
        "last_syllable": 286, "other_syllables": 854,
    }
    assert data["recall"] == "100.00%"
