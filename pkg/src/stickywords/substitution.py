"""Single-word substitution candidates from a thesaurus.

For every content word of a title and every stored synonym, a candidate is
emitted when the synonym qualifies as sticky under the active thresholds.
Each candidate replaces exactly one word; meaning preservation is left to
human review, so candidates start Pending and move to Accepted or Rejected
exactly once.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Mapping

from .errors import (
    AlreadyReviewed,
    IdentityReplacement,
    MalformedRecord,
    PositionOutOfRange,
    ResourceMissing,
)
from .corpus import FrequencyModel
from .scoring import (
    ScoreConfig,
    StickyScore,
    is_sticky,
    score_from_dict,
    score_to_dict,
    word_stickiness,
)
from .sentiment import SentimentLexicon
from .text import Title, apply_casing, is_content_word, tokenize

PENDING = "pending"
ACCEPTED = "accepted"
REJECTED = "rejected"

DECISIONS = frozenset({ACCEPTED, REJECTED})


@dataclass(frozen=True)
class Thesaurus:
    """Directional synonym map: original word -> replacement words.

    Lookup is one-way on purpose; a stored replacement need not map back.
    """

    synonyms: Mapping[str, frozenset[str]]


@dataclass(frozen=True)
class SubstitutionCandidate:
    """One proposed single-word replacement, with score deltas and status."""

    candidate_id: str
    title_id: str
    position: int
    original: str
    replacement: str
    original_score: StickyScore
    replacement_score: StickyScore
    delta: float
    status: str = PENDING


def load_thesaurus(path) -> Thesaurus:
    """Load a thesaurus file: `word<TAB>syn1,syn2,...`, '#' comments allowed.

    Keys and synonyms are lowercased; self-synonyms are dropped. Repeated
    keys merge their synonym sets.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except FileNotFoundError:
        raise ResourceMissing(f"thesaurus not found: {path}") from None

    synonyms: dict[str, set[str]] = {}
    for line_no, line in enumerate(lines, start=1):
        entry = line.split("#", 1)[0].strip()
        if not entry:
            continue
        word, _, syn_text = entry.partition("\t")
        word = word.strip().lower()
        if not word or not syn_text.strip():
            raise MalformedRecord(line_no, "expected `word<TAB>syn1,syn2,...`")
        stored = synonyms.setdefault(word, set())
        for syn in syn_text.split(","):
            syn = syn.strip().lower()
            if syn and syn != word:
                stored.add(syn)
    return Thesaurus(synonyms={word: frozenset(syns) for word, syns in synonyms.items()})


def synonyms_of(word: str, thesaurus: Thesaurus) -> frozenset[str]:
    """Stored synonym set for a normalized word; empty when unknown."""
    return thesaurus.synonyms.get(word, frozenset())


def candidate_id_for(title_id: str, position: int, replacement: str) -> str:
    return f"{title_id}:{position}:{replacement}"


def generate_candidates(
    title: Title,
    model: FrequencyModel,
    lexicon: SentimentLexicon,
    thesaurus: Thesaurus,
    config: ScoreConfig,
) -> list[SubstitutionCandidate]:
    """All qualifying one-word substitutions for a title, ranked.

    Ordering is total and deterministic: delta descending, then position
    ascending, then replacement lexicographic.
    """
    if model is None or lexicon is None or thesaurus is None:
        raise ResourceMissing("candidate generation needs model, lexicon, and thesaurus")

    candidates = []
    for token in title.tokens:
        if not is_content_word(token, config.stopwords, config.min_len):
            continue
        replacements = synonyms_of(token.normal, thesaurus)
        if not replacements:
            continue
        original_score = word_stickiness(token.normal, model, lexicon, config)
        for replacement in sorted(replacements):
            replacement_score = word_stickiness(replacement, model, lexicon, config)
            if not is_sticky(replacement_score, config):
                continue
            candidates.append(
                SubstitutionCandidate(
                    candidate_id=candidate_id_for(title.id, token.position, replacement),
                    title_id=title.id,
                    position=token.position,
                    original=token.normal,
                    replacement=replacement,
                    original_score=original_score,
                    replacement_score=replacement_score,
                    delta=replacement_score.composite - original_score.composite,
                )
            )
    candidates.sort(key=lambda c: (-c.delta, c.position, c.replacement))
    return candidates


def apply_substitution(title: Title, candidate: SubstitutionCandidate) -> Title:
    """Produce the treatment title: one token replaced, casing inherited.

    Every other token and all separators are byte-identical to the input.
    """
    if not 0 <= candidate.position < len(title.tokens):
        raise PositionOutOfRange(
            f"position {candidate.position} outside title {title.id!r} "
            f"({len(title.tokens)} tokens)"
        )
    token = title.tokens[candidate.position]
    if token.normal != candidate.original:
        raise PositionOutOfRange(
            f"candidate original {candidate.original!r} does not match token "
            f"{token.normal!r} at position {candidate.position} of title {title.id!r}"
        )
    if candidate.replacement == candidate.original:
        raise IdentityReplacement(f"replacement equals original: {candidate.original!r}")

    surfaces = [t.surface for t in title.tokens]
    surfaces[candidate.position] = apply_casing(candidate.replacement, token.casing)
    parts = [title.separators[0]]
    for surface, sep in zip(surfaces, title.separators[1:]):
        parts.append(surface)
        parts.append(sep)
    treated_raw = "".join(parts)
    treated_id = f"{title.id}+{candidate.position}.{candidate.replacement}"
    return tokenize(treated_raw, title_id=treated_id)


def candidate_to_dict(candidate: SubstitutionCandidate) -> dict:
    """JSON-ready candidate record (status included)."""
    return {
        "candidate_id": candidate.candidate_id,
        "title_id": candidate.title_id,
        "position": candidate.position,
        "original": candidate.original,
        "replacement": candidate.replacement,
        "original_score": score_to_dict(candidate.original_score),
        "replacement_score": score_to_dict(candidate.replacement_score),
        "delta": candidate.delta,
        "status": candidate.status,
    }


def candidate_from_dict(data: dict) -> SubstitutionCandidate:
    return SubstitutionCandidate(
        candidate_id=data["candidate_id"],
        title_id=data["title_id"],
        position=data["position"],
        original=data["original"],
        replacement=data["replacement"],
        original_score=score_from_dict(data["original_score"]),
        replacement_score=score_from_dict(data["replacement_score"]),
        delta=data["delta"],
        status=data.get("status", PENDING),
    )


def review(candidate: SubstitutionCandidate, decision: str) -> SubstitutionCandidate:
    """Record a human verdict; only Pending candidates can be decided."""
    if decision not in DECISIONS:
        raise ValueError(f"decision must be one of {sorted(DECISIONS)}, got {decision!r}")
    if candidate.status != PENDING:
        raise AlreadyReviewed(
            f"candidate {candidate.candidate_id} already {candidate.status}"
        )
    return replace(candidate, status=decision)
