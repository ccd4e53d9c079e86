import random
import string

import pytest

from stickywords.errors import ResourceMissing
from stickywords.text import (
    CASING_CAPITALIZED,
    CASING_LOWER,
    CASING_MIXED,
    CASING_UPPER,
    Token,
    apply_casing,
    casing_of,
    is_content_word,
    load_stopwords,
    stopword_hash,
    tokenize,
)

STOPWORDS = load_stopwords()


def test_basic_tokenization():
    title = tokenize("End of the library")
    assert [t.normal for t in title.tokens] == ["end", "of", "the", "library"]
    assert [t.casing for t in title.tokens] == [
        CASING_CAPITALIZED,
        CASING_LOWER,
        CASING_LOWER,
        CASING_LOWER,
    ]


def test_empty_input():
    title = tokenize("")
    assert title.tokens == ()
    assert title.reconstruct() == ""


def test_boundary_punctuation_stripped():
    title = tokenize("digital ubiquity?")
    assert [t.normal for t in title.tokens] == ["digital", "ubiquity"]
    assert title.reconstruct() == "digital ubiquity?"


def test_positions_contiguous():
    title = tokenize("a b, c; d e!")
    assert [t.position for t in title.tokens] == list(range(5))


def test_hyphenated_and_apostrophe_words_kept_whole():
    title = tokenize("Data-driven don't stop")
    assert [t.normal for t in title.tokens] == ["data-driven", "don't", "stop"]


def test_normal_is_lowercased_surface():
    title = tokenize("Colon: SEPARATED (Words)")
    for token in title.tokens:
        assert token.normal == token.surface.lower()
        assert token.normal
        assert not token.normal.startswith("-") and not token.normal.endswith("-")


def test_casing_classification():
    assert casing_of("end") == CASING_LOWER
    assert casing_of("End") == CASING_CAPITALIZED
    assert casing_of("END") == CASING_UPPER
    assert casing_of("EnD") == CASING_MIXED
    assert casing_of("A") == CASING_CAPITALIZED


def test_apply_casing():
    assert apply_casing("death", CASING_CAPITALIZED) == "Death"
    assert apply_casing("death", CASING_UPPER) == "DEATH"
    assert apply_casing("death", CASING_LOWER) == "death"
    assert apply_casing("death", CASING_MIXED) == "death"


def test_determinism():
    raw = "End of the library: does digital ubiquity endangers traditional channels?"
    assert tokenize(raw, "x") == tokenize(raw, "x")


def _random_title(rng):
    words = []
    for _ in range(rng.randint(0, 10)):
        core = "".join(rng.choice(string.ascii_letters + "0123456789'-") for _ in range(rng.randint(1, 9)))
        words.append(core)
    punct = " \t.,:;?!()\"'"
    parts = []
    for word in words:
        parts.append("".join(rng.choice(punct) for _ in range(rng.randint(0, 3))))
        parts.append(word)
        parts.append(rng.choice([" ", "  ", " ", "\t"]))
    parts.append("".join(rng.choice(punct) for _ in range(rng.randint(0, 3))))
    return "".join(parts)


def test_reconstruction_property():
    rng = random.Random(20260810)
    for _ in range(500):
        raw = _random_title(rng)
        title = tokenize(raw)
        assert title.reconstruct() == raw
        for index, token in enumerate(title.tokens):
            assert token.position == index
            assert token.normal == token.surface.lower()
            assert token.normal


@pytest.mark.parametrize(
    "word,expected",
    [("the", False), ("library", True), ("of", False)],
)
def test_is_content_word_stopwords(word, expected):
    token = tokenize(word).tokens[0]
    assert is_content_word(token, STOPWORDS) is expected


def test_is_content_word_min_len():
    token = tokenize("ox").tokens[0]
    assert not is_content_word(token, STOPWORDS, min_len=3)
    assert is_content_word(token, STOPWORDS, min_len=2)


def test_is_content_word_requires_alphabetic():
    for raw in ["3rd", "data-driven", "don't"]:
        token = tokenize(raw).tokens[0]
        assert not is_content_word(token, STOPWORDS)


def test_load_stopwords_file(tmp_path):
    path = tmp_path / "stop.txt"
    path.write_text("# comment\nthe\nAnd  # trailing comment\n\nof\n")
    words = load_stopwords(path)
    assert words == frozenset({"the", "and", "of"})


def test_load_stopwords_missing():
    with pytest.raises(ResourceMissing):
        load_stopwords("/nonexistent/stopwords.txt")


def test_stopword_hash_order_independent():
    assert stopword_hash(frozenset({"a", "b"})) == stopword_hash(frozenset({"b", "a"}))
    assert stopword_hash(frozenset({"a"})) != stopword_hash(frozenset({"b"}))


def test_default_stopword_list_size():
    assert 120 <= len(STOPWORDS) <= 200
