"""Per-word and per-title stickiness scores.

A sticky word is simultaneously familiar (popular-culture frequency),
novel (rare in the context corpus), and emotive (non-neutral polarity).
The composite is the geometric mean of familiarity and novelty, gated to
zero for neutral words when emotiveness is required: both frequency
attributes must be present for a word to score at all, and emotionality
acts as a categorical gate rather than a magnitude.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .corpus import FrequencyModel, familiarity, novelty
from .errors import ResourceMissing
from .sentiment import DEFAULT_NEUTRAL_BAND, NEUTRAL, Polarity, SentimentLexicon, polarity
from .text import DEFAULT_MIN_LEN, Title, is_content_word, load_stopwords


@dataclass(frozen=True)
class ScoreConfig:
    """Thresholds and filters for scoring and candidate generation.

    theta_f / theta_n   -- minimum familiarity / novelty for a word to
                           qualify as sticky
    require_emotive     -- neutral-polarity words cannot be sticky
    neutral_band        -- polarity threshold used when loading lexicons
    min_len / stopwords -- content-word filter
    """

    theta_f: float = 0.3
    theta_n: float = 0.3
    require_emotive: bool = True
    neutral_band: float = DEFAULT_NEUTRAL_BAND
    min_len: int = DEFAULT_MIN_LEN
    stopwords: frozenset[str] = field(default_factory=load_stopwords)

    def __post_init__(self):
        for name in ("theta_f", "theta_n", "neutral_band"):
            value = getattr(self, name)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{name} must be in [0, 1], got {value}")


@dataclass(frozen=True)
class StickyScore:
    """The three attribute scores plus their composite, all in [0, 1]."""

    familiarity: float
    novelty: float
    polarity: Polarity
    composite: float


def word_stickiness(
    word: str,
    model: FrequencyModel,
    lexicon: SentimentLexicon,
    config: ScoreConfig,
) -> StickyScore:
    """Score one normalized word against the loaded resources."""
    fam = familiarity(word, model.popularity)
    nov = novelty(word, model.context)
    pol = polarity(word, lexicon)
    if config.require_emotive and pol.label == NEUTRAL:
        composite = 0.0
    else:
        composite = math.sqrt(fam * nov)
    return StickyScore(familiarity=fam, novelty=nov, polarity=pol, composite=composite)


def is_sticky(score: StickyScore, config: ScoreConfig) -> bool:
    """The qualification predicate used by candidate generation."""
    if score.familiarity < config.theta_f or score.novelty < config.theta_n:
        return False
    if config.require_emotive and score.polarity.label == NEUTRAL:
        return False
    return True


def title_score(
    title: Title,
    model: FrequencyModel,
    lexicon: SentimentLexicon,
    config: ScoreConfig,
) -> float:
    """Maximum composite stickiness over the title's content words.

    A single replaced word drives a treatment title's effect, so the max
    isolates exactly that word. Titles without content words score 0.
    """
    best = 0.0
    for token in title.tokens:
        if not is_content_word(token, config.stopwords, config.min_len):
            continue
        score = word_stickiness(token.normal, model, lexicon, config)
        best = max(best, score.composite)
    return best


def score_to_dict(score: StickyScore) -> dict:
    return {
        "familiarity": score.familiarity,
        "novelty": score.novelty,
        "polarity": score.polarity.label,
        "valence": score.polarity.valence,
        "composite": score.composite,
    }


def score_from_dict(data: dict) -> StickyScore:
    return StickyScore(
        familiarity=data["familiarity"],
        novelty=data["novelty"],
        polarity=Polarity(label=data["polarity"], valence=data["valence"]),
        composite=data["composite"],
    )


def score_report(
    title: Title,
    model: FrequencyModel,
    lexicon: SentimentLexicon,
    config: ScoreConfig,
) -> dict:
    """Per-word score table plus the title score, JSON-ready."""
    words = []
    best = 0.0
    for token in title.tokens:
        if not is_content_word(token, config.stopwords, config.min_len):
            continue
        score = word_stickiness(token.normal, model, lexicon, config)
        best = max(best, score.composite)
        words.append({"word": token.normal, "position": token.position, **score_to_dict(score)})
    return {"text": title.raw, "title_score": best, "words": words}


def load_config(path=None, stopword_path=None, **overrides) -> ScoreConfig:
    """Build a ScoreConfig from an optional JSON config file plus overrides.

    Recognized file keys: theta_f, theta_n, require_emotive, neutral_band,
    min_len, stopword_path. Explicit keyword overrides win over the file;
    a stopword_path argument wins over the file's.
    """
    settings: dict = {}
    file_stopword_path = None
    if path is not None:
        try:
            with open(path, encoding="utf-8") as handle:
                document = json.load(handle)
        except FileNotFoundError:
            raise ResourceMissing(f"config file not found: {path}") from None
        except json.JSONDecodeError as exc:
            raise ValueError(f"config file is not valid JSON: {path} ({exc})") from None
        known = {"theta_f", "theta_n", "require_emotive", "neutral_band", "min_len"}
        unknown = set(document) - known - {"stopword_path"}
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        file_stopword_path = document.get("stopword_path")
        settings.update({k: v for k, v in document.items() if k in known})

    settings.update({k: v for k, v in overrides.items() if v is not None})
    effective_stopword_path = stopword_path if stopword_path is not None else file_stopword_path
    settings["stopwords"] = load_stopwords(effective_stopword_path)
    return ScoreConfig(**settings)
