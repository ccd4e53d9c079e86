"""Frequency models behind the novelty and familiarity scores.

Two corpora feed the scores: a context corpus of titles (document
frequencies, low frequency means novel) and a popularity keyword corpus
(occurrence counts, high frequency means familiar). Built models are
immutable and can be saved to / loaded from a single JSON model file so
analysis runs do not re-ingest the corpora.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EmptyCorpus, MalformedRecord, ResourceMissing
from .text import Title, tokenize

MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class ContextStats:
    """Document frequencies over the context corpus.

    doc_count -- number of context titles
    df        -- word -> number of distinct titles containing it
    """

    doc_count: int
    df: Mapping[str, int]


@dataclass(frozen=True)
class PopStats:
    """Occurrence counts over the popularity keyword corpus."""

    counts: Mapping[str, int]
    max_count: int


@dataclass(frozen=True)
class FrequencyModel:
    """Both frequency models plus the scoring config fingerprint.

    The fingerprint (stopword hash, min_len) records the filter config
    active when the model was built so later runs can detect drift.
    """

    context: ContextStats
    popularity: PopStats
    stopword_hash: str
    min_len: int


def build_context_model(titles: Iterable[Title]) -> ContextStats:
    """Count, for every word, the number of distinct titles containing it."""
    df: dict[str, int] = {}
    doc_count = 0
    for title in titles:
        doc_count += 1
        for normal in {token.normal for token in title.tokens}:
            df[normal] = df.get(normal, 0) + 1
    if doc_count == 0:
        raise EmptyCorpus("context corpus has no titles")
    return ContextStats(doc_count=doc_count, df=df)


def build_pop_model(keyword_entries: Iterable[tuple[str, int]]) -> PopStats:
    """Aggregate keyword counts into per-word occurrence counts.

    Multi-word keywords are split and each constituent word is credited
    with the keyword's count; repeated words accumulate.
    """
    counts: dict[str, int] = {}
    for keyword, count in keyword_entries:
        if count < 1:
            raise ValueError(f"keyword count must be >= 1, got {count} for {keyword!r}")
        for token in tokenize(keyword).tokens:
            counts[token.normal] = counts.get(token.normal, 0) + count
    if not counts:
        raise EmptyCorpus("popularity corpus has no keywords")
    return PopStats(counts=counts, max_count=max(counts.values()))


def novelty(word: str, ctx: ContextStats) -> float:
    """Smoothed inverse document frequency, normalized into [0, 1].

    ln((N+1)/(df+1)) / ln(N+1); a word absent from the context scores 1,
    a word present in every document scores 0.
    """
    n = ctx.doc_count
    df = ctx.df.get(word, 0)
    return math.log((n + 1) / (df + 1)) / math.log(n + 1)


def familiarity(word: str, pop: PopStats) -> float:
    """Log-scaled popularity in [0, 1]: ln(1+count) / ln(1+max_count)."""
    count = pop.counts.get(word, 0)
    return math.log(1 + count) / math.log(1 + pop.max_count)


def read_context_corpus(path) -> list[Title]:
    """Read a context corpus file: one title per line, UTF-8.

    Lines that are JSON objects with an id and text field are also
    accepted (detected from the first non-blank line). Blank lines are
    skipped; plain-line titles get their 1-based line number as id.
    """
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except FileNotFoundError:
        raise ResourceMissing(f"context corpus not found: {path}") from None

    jsonl = False
    for line in lines:
        if line.strip():
            jsonl = line.lstrip().startswith("{")
            break

    titles = []
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        if jsonl:
            try:
                record = json.loads(line)
                text = record["text"]
            except (json.JSONDecodeError, TypeError, KeyError):
                raise MalformedRecord(line_no, "expected a JSON object with a text field") from None
            title_id = str(record.get("id", line_no))
            titles.append(tokenize(text, title_id=title_id))
        else:
            titles.append(tokenize(line, title_id=str(line_no)))
    return titles


def read_pop_corpus(path) -> list[tuple[str, int]]:
    """Read a popularity corpus file: `keyword<TAB>count`, count optional."""
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except FileNotFoundError:
        raise ResourceMissing(f"popularity corpus not found: {path}") from None

    entries = []
    for line_no, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        keyword, _, count_text = line.partition("\t")
        keyword = keyword.strip()
        count_text = count_text.strip()
        if not keyword:
            raise MalformedRecord(line_no, "missing keyword")
        if count_text:
            try:
                count = int(count_text)
            except ValueError:
                raise MalformedRecord(line_no, f"count is not an integer: {count_text!r}") from None
        else:
            count = 1
        if count < 1:
            raise MalformedRecord(line_no, f"count must be >= 1, got {count}")
        entries.append((keyword, count))
    return entries


def save_model(model: FrequencyModel, path) -> None:
    """Write the compiled model file (single JSON document, versioned)."""
    document = {
        "format_version": MODEL_FORMAT_VERSION,
        "doc_count": model.context.doc_count,
        "df": dict(sorted(model.context.df.items())),
        "counts": dict(sorted(model.popularity.counts.items())),
        "max_count": model.popularity.max_count,
        "stopword_hash": model.stopword_hash,
        "min_len": model.min_len,
    }
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(document, handle, indent=1)
        handle.write("\n")


def load_model(path) -> FrequencyModel:
    """Load a compiled model file, validating its format version."""
    try:
        with open(path, encoding="utf-8") as handle:
            document = json.load(handle)
    except FileNotFoundError:
        raise ResourceMissing(f"model file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ValueError(f"model file is not valid JSON: {path} ({exc})") from None

    version = document.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model format_version {version!r} (expected {MODEL_FORMAT_VERSION})")
    return FrequencyModel(
        context=ContextStats(doc_count=document["doc_count"], df=document["df"]),
        popularity=PopStats(counts=document["counts"], max_count=document["max_count"]),
        stopword_hash=document["stopword_hash"],
        min_len=document["min_len"],
    )
