"""Golden-file tests for the line-oriented formats."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from textsteg import formats, missing_letter, wordlist
from textsteg.errors import FormatError


def test_int_file_bytes():
    assert formats.write_ints([65, 0, 255]) == "65\n0\n255\n"
    assert formats.write_ints([]) == ""
    assert formats.read_ints("") == []
    assert formats.read_ints("65\n0\n255\n") == [65, 0, 255]


@pytest.mark.parametrize("text", ["256\n", "-1\n", "abc\n", "1\n\n2\n", "1.5\n", "٣\n"])
def test_int_file_rejects(text):
    with pytest.raises(FormatError):
        formats.read_ints(text)


def test_flag_and_digit_ranges():
    assert formats.read_stego_key("missing-letter", "0\n10\n") == [0, 10]
    with pytest.raises(FormatError):
        formats.read_stego_key("missing-letter", "11\n")
    with pytest.raises(FormatError):
        formats.read_stego_key("wordlist", "3\n")


def test_letter_key_wrapping():
    key = "te" * 50
    text = formats.write_letter_key(key)
    lines = text.splitlines()
    assert [len(x) for x in lines] == [72, 28]
    assert text.endswith("\n")
    assert formats.read_letter_key(text) == key
    assert formats.write_letter_key("") == ""


def test_letter_key_rejects_digits():
    with pytest.raises(FormatError):
        formats.read_letter_key("ab1\n")


@given(st.lists(st.integers(0, 255)))
def test_int_round_trip(values):
    text = formats.write_ints(values)
    assert formats.write_ints(formats.read_ints(text)) == text


@given(st.text("abcdefghijklmnopqrstuvwxyz", max_size=400))
def test_letter_round_trip(key):
    text = formats.write_letter_key(key)
    assert formats.write_letter_key(formats.read_letter_key(text)) == text


def test_puzzle_stego_file_layout(words):
    b = missing_letter.hide([20, 72, 101], words, random.Random(11))
    lines = b.stego_text.split("\n")
    assert lines[-1] == "" and len(lines) == 11
    for line in lines[:-1]:
        word, hint = missing_letter.parse_line(line)
        assert line == (word if hint is None else f"{word} ({hint})")
    assert missing_letter.parse_line("TETRACYCL?NE (antibiotic)") == ("TETRACYCL?NE", "antibiotic")


def test_wordlist_stego_file_layout(words):
    b = wordlist.hide([100], words, random.Random(2))
    assert b.stego_text.count("\n") == 10 and b.stego_text.endswith("\n")
    assert all(w.isalpha() for w in b.stego_text.splitlines())


def test_stego_key_round_trip(words):
    for method, key in (("missing-letter", [0, 3, 10]), ("wordlist", [0, 1, 2]), ("paragraph", "tehs")):
        text = formats.write_stego_key(method, key)
        assert formats.read_stego_key(method, text) == key
        assert formats.write_stego_key(method, formats.read_stego_key(method, text)) == text
