"""Tokenization, casing, and content-word filtering for short titles.

Titles are split into word cores (letters/digits with internal apostrophes
and hyphens); everything between cores, including whitespace and boundary
punctuation, is kept as separator text so the original string can always be
reassembled byte-for-byte.
"""
from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass
from importlib import resources as importlib_resources

from .errors import ResourceMissing

# Casing patterns a token surface can carry.
CASING_LOWER = "lower"
CASING_CAPITALIZED = "capitalized"
CASING_UPPER = "upper"
CASING_MIXED = "mixed"

# A word core starts with a letter or digit, may continue with letters,
# digits, apostrophes, or hyphens, and never ends with a hyphen.
# `[^\W_]` is Unicode alphanumeric without the underscore.
_WORD_RE = re.compile(r"[^\W_](?:['\-]|[^\W_])*(?<!-)")

DEFAULT_MIN_LEN = 3


@dataclass(frozen=True)
class Token:
    """One word of a title.

    surface  -- the exact slice of the original text (boundary punctuation
                excluded; it lives in the title separators)
    normal   -- lowercased surface, the form all scoring operates on
    position -- 0-based token index within the title
    casing   -- one of lower / capitalized / upper / mixed
    """

    surface: str
    normal: str
    position: int
    casing: str


@dataclass(frozen=True)
class Title:
    """A tokenized title.

    separators has len(tokens) + 1 entries; interleaving separators and
    token surfaces reproduces raw exactly (see reconstruct).
    """

    id: str
    raw: str
    tokens: tuple[Token, ...]
    separators: tuple[str, ...]

    def reconstruct(self) -> str:
        parts = [self.separators[0]]
        for token, sep in zip(self.tokens, self.separators[1:]):
            parts.append(token.surface)
            parts.append(sep)
        return "".join(parts)


def casing_of(surface: str) -> str:
    """Classify the casing pattern of a token surface."""
    if surface == surface.lower():
        return CASING_LOWER
    if len(surface) > 1 and surface == surface.upper():
        return CASING_UPPER
    if surface == surface[:1].upper() + surface[1:].lower():
        return CASING_CAPITALIZED
    return CASING_MIXED


def apply_casing(word: str, casing: str) -> str:
    """Render a lowercase replacement word in the given casing pattern.

    Mixed-case patterns cannot be transferred, so the word is kept as-is.
    """
    if casing == CASING_UPPER:
        return word.upper()
    if casing == CASING_CAPITALIZED:
        return word[:1].upper() + word[1:]
    return word


def tokenize(raw: str, title_id: str = "") -> Title:
    """Split raw text into a Title. Deterministic; empty input is valid."""
    tokens = []
    separators = []
    last = 0
    for position, match in enumerate(_WORD_RE.finditer(raw)):
        separators.append(raw[last : match.start()])
        surface = match.group()
        tokens.append(
            Token(
                surface=surface,
                normal=surface.lower(),
                position=position,
                casing=casing_of(surface),
            )
        )
        last = match.end()
    separators.append(raw[last:])
    return Title(id=title_id, raw=raw, tokens=tuple(tokens), separators=tuple(separators))


def is_content_word(token: Token, stopwords: frozenset[str], min_len: int = DEFAULT_MIN_LEN) -> bool:
    """True for meaning-bearing words: alphabetic, long enough, not a stopword."""
    normal = token.normal
    return len(normal) >= min_len and normal.isalpha() and normal not in stopwords


def load_stopwords(path=None) -> frozenset[str]:
    """Load a stopword file: UTF-8, one lowercase word per line, '#' comments.

    With no path, the bundled default list (~150 common English words) is used.
    """
    if path is None:
        text = (
            importlib_resources.files("stickywords")
            .joinpath("data/stopwords.txt")
            .read_text(encoding="utf-8")
        )
    else:
        try:
            with open(path, encoding="utf-8") as handle:
                text = handle.read()
        except FileNotFoundError:
            raise ResourceMissing(f"stopword file not found: {path}") from None
    words = set()
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip()
        if word:
            words.add(word.lower())
    return frozenset(words)


def stopword_hash(stopwords: frozenset[str]) -> str:
    """Canonical fingerprint of a stopword set (order-independent)."""
    canonical = "\n".join(sorted(stopwords)).encode("utf-8")
    return hashlib.sha256(canonical).hexdigest()
