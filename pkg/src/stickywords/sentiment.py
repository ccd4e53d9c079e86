"""Word-level sentiment polarity from a valence lexicon.

A word is positive when its valence exceeds the neutral band, negative when
it falls below the negated band, and neutral otherwise. Words absent from
the lexicon are neutral with valence 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import MalformedRecord, ResourceMissing

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"

DEFAULT_NEUTRAL_BAND = 0.05


@dataclass(frozen=True)
class SentimentLexicon:
    """Valence scores in [-1, 1] plus the neutral band threshold."""

    scores: Mapping[str, float]
    neutral_band: float = DEFAULT_NEUTRAL_BAND

    def __post_init__(self):
        if not 0.0 <= self.neutral_band < 1.0:
            raise ValueError(f"neutral_band must be in [0, 1), got {self.neutral_band}")


@dataclass(frozen=True)
class Polarity:
    label: str
    valence: float


def polarity(word: str, lexicon: SentimentLexicon) -> Polarity:
    """Classify one normalized (lowercase) word."""
    valence = lexicon.scores.get(word, 0.0)
    if valence > lexicon.neutral_band:
        label = POSITIVE
    elif valence < -lexicon.neutral_band:
        label = NEGATIVE
    else:
        label = NEUTRAL
    return Polarity(label=label, valence=valence)


def load_lexicon(path, neutral_band: float = DEFAULT_NEUTRAL_BAND) -> SentimentLexicon:
    """Load a lexicon file: `word<TAB>valence` per line, '#' comments allowed."""
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except FileNotFoundError:
        raise ResourceMissing(f"sentiment lexicon not found: {path}") from None

    scores: dict[str, float] = {}
    for line_no, line in enumerate(lines, start=1):
        entry = line.split("#", 1)[0].strip()
        if not entry:
            continue
        word, _, valence_text = entry.partition("\t")
        word = word.strip().lower()
        valence_text = valence_text.strip()
        if not word or not valence_text:
            raise MalformedRecord(line_no, "expected `word<TAB>valence`")
        try:
            valence = float(valence_text)
        except ValueError:
            raise MalformedRecord(line_no, f"valence is not a number: {valence_text!r}") from None
        if not -1.0 <= valence <= 1.0:
            raise MalformedRecord(line_no, f"valence out of [-1, 1]: {valence}")
        scores[word] = valence
    return SentimentLexicon(scores=scores, neutral_band=neutral_band)
