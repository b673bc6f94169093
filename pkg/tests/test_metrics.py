import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from textsteg.errors import LineCountMismatch, ZeroCover
from textsteg.metrics import (
    CapacityReport,
    SimilarityParams,
    capacity_percent,
    jaro,
    jaro_winkler,
    match_counts,
    stego_similarity_report,
)

import oracles

# Frozen from the brute-force oracle: jaro = 17/18, jaro-winkler = 173/180.
MARTHA_JARO = 0.9444
MARTHA_JW = 0.9611


def test_oracle_frozen_values():
    assert oracles.jaro("MARTHA", "MARHTA") == Fraction(17, 18)
    assert oracles.jaro_winkler("MARTHA", "MARHTA") == Fraction(173, 180)


def test_martha():
    assert jaro("MARTHA", "MARHTA") == pytest.approx(MARTHA_JARO, abs=1e-4)
    assert jaro_winkler("MARTHA", "MARHTA") == pytest.approx(MARTHA_JW, abs=1e-4)


@pytest.mark.parametrize("a, b, expected", [("ABC", "ABC", 1.0), ("ABC", "XYZ", 0.0), ("", "", 1.0), ("A", "", 0.0)])
def test_jaro_edges(a, b, expected):
    assert jaro(a, b) == expected


def test_zero_prefix_gets_no_boost():
    assert jaro_winkler("ABCD", "XBCD") == jaro("ABCD", "XBCD")


def test_identical_is_one_for_any_params():
    for p in (0.0, 0.1, 0.25):
        assert jaro_winkler("lighthouse", "lighthouse", SimilarityParams(p, 4)) == 1.0


def test_question_mark_is_plain_character():
    score = jaro_winkler("tetracycline", "tetracycl?ne")
    assert score == pytest.approx(float(oracles.jaro_winkler("tetracycline", "tetracycl?ne")))
    assert 0.9 < score < 1.0


def test_exhaustive_small_alphabet_counts():
    strings = ["".join(p) for n in range(4) for p in itertools.product("abcd", repeat=n)]
    for a in strings:
        for b in strings:
            m, t = match_counts(a, b)
            om, ot2 = oracles.jaro_parts(a, b)
            assert (m, t * 2) == (om, ot2), (a, b)
            assert jaro(a, b) == pytest.approx(float(oracles.jaro(a, b)), abs=1e-12)


@given(st.text("abcde", max_size=12), st.text("abcde", max_size=12))
def test_symmetry_and_range(a, b):
    assert jaro(a, b) == pytest.approx(jaro(b, a), abs=1e-12)
    j, jw = jaro(a, b), jaro_winkler(a, b)
    assert 0.0 <= j <= jw <= 1.0


@given(st.text(max_size=15), st.text(max_size=15))
def test_matches_oracle_unicode(a, b):
    assert jaro_winkler(a, b) == pytest.approx(float(oracles.jaro_winkler(a, b)), abs=1e-12)


def test_params_validation():
    with pytest.raises(ValueError):
        SimilarityParams(0.3, 4)
    with pytest.raises(ValueError):
        SimilarityParams(0.1, -1)
    with pytest.raises(ValueError):
        SimilarityParams(0.25, 5)


@pytest.mark.parametrize("hidden, cover, expected", [(12, 132, 9.09), (0, 500, 0.0), (50, 500, 10.0)])
def test_capacity(hidden, cover, expected):
    assert capacity_percent(hidden, cover) == pytest.approx(expected, abs=0.005)


def test_capacity_zero_cover():
    with pytest.raises(ZeroCover):
        capacity_percent(3, 0)
    with pytest.raises(ZeroCover):
        CapacityReport(3, 0)


def test_capacity_linear_in_hidden():
    for h in range(0, 100, 7):
        assert capacity_percent(2 * h, 400) == pytest.approx(2 * capacity_percent(h, 400))


def test_capacity_report():
    rep = CapacityReport(12, 132)
    assert rep.percent == pytest.approx(9.0909, abs=1e-4)


COVER = """PENTAPRAZOLE
TETRACYCLINE
LEISHMANIASIS
NONIMIDAZOLE
ZAFIRLUKAST
NORTRIPTYLINE
ZOPIDEM
VENLAFAXINE
TICLOPIDINE
CARISOPRODOL
PHENINDIONE
PROPOFOL
"""

STEGO = """PENTAPR?ZOLE
TETRACYCL?NE (antibiotic)
LEI?HMANIASIS
NO?IMIDAZOLE
ZAFIRLU?AST
NO?TRIPTYLINE
ZOPI?EM
VENLAFAX?NE
TICLOPI?INE
CARIS?PRODOL
PHENI?DIONE
PROP?FOL (drug)
"""


def test_drug_puzzle_similarity():
    report = stego_similarity_report(COVER, STEGO)
    assert len(report.per_pair) == 12
    assert report.average >= 0.90
    assert all(0 <= s <= 1 for _, s in report.per_pair)
    # hinted lines score lowest
    scores = dict(report.per_pair)
    assert scores[2] < 0.9 and scores[12] < 0.9


def test_identical_files_report():
    report = stego_similarity_report(COVER, COVER)
    assert report.average == 1.0
    assert report.format().endswith("average\t1.00\n")


def test_line_count_mismatch():
    with pytest.raises(LineCountMismatch):
        stego_similarity_report("a\nb\n", "a\n")


def test_report_format():
    text = stego_similarity_report("abc\nxyz\n", "abc\nxyq\n").format()
    lines = text.splitlines()
    assert lines[0] == "1\t1.0000"
    assert lines[1].startswith("2\t")
    assert lines[-1].startswith("average\t")
