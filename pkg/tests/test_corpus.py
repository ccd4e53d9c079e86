import math
import random
import re

import pytest

from stickywords.corpus import (
    ContextStats,
    FrequencyModel,
    PopStats,
    build_context_model,
    build_pop_model,
    familiarity,
    load_model,
    novelty,
    read_context_corpus,
    read_pop_corpus,
    save_model,
)
from stickywords.errors import EmptyCorpus, MalformedRecord, ResourceMissing
from stickywords.text import tokenize


def _titles(*texts):
    return [tokenize(text, str(i)) for i, text in enumerate(texts)]


def test_context_model_example():
    ctx = build_context_model(_titles("big data", "big ideas", "small data"))
    assert ctx.doc_count == 3
    assert ctx.df["big"] == 2
    assert ctx.df["data"] == 2
    assert ctx.df["ideas"] == 1


def test_context_model_single_title():
    ctx = build_context_model(_titles("x"))
    assert ctx.doc_count == 1
    assert ctx.df["x"] == 1


def test_duplicate_word_counts_once_per_document():
    ctx = build_context_model(_titles("data data data"))
    assert ctx.df["data"] == 1


def test_context_model_empty():
    with pytest.raises(EmptyCorpus):
        build_context_model([])


def test_pop_model_max_count():
    pop = build_pop_model([("death", 99), ("hero", 9)])
    assert pop.max_count == 99
    assert pop.counts["hero"] == 9


def test_pop_model_sums_repeats():
    pop = build_pop_model([("death", 50), ("death", 49)])
    assert pop.counts["death"] == 99


def test_pop_model_splits_multiword_keywords():
    # Oracle: count each whitespace-separated word of each keyword by hand.
    entries = [("serial killer", 310), ("killer", 5), ("last words", 2)]
    expected = {}
    for keyword, count in entries:
        for word in re.findall(r"[a-z0-9']+", keyword.lower()):
            expected[word] = expected.get(word, 0) + count
    pop = build_pop_model(entries)
    assert dict(pop.counts) == expected
    assert pop.counts["killer"] == 315


def test_pop_model_empty():
    with pytest.raises(EmptyCorpus):
        build_pop_model([])


def test_pop_model_rejects_nonpositive_count():
    with pytest.raises(ValueError):
        build_pop_model([("death", 0)])


def test_novelty_extremes():
    ctx = ContextStats(doc_count=9, df={"common": 9})
    assert novelty("unseen", ctx) == pytest.approx(1.0)
    assert novelty("common", ctx) == pytest.approx(0.0)


def test_novelty_hand_value():
    ctx = ContextStats(doc_count=9, df={"w": 4})
    assert novelty("w", ctx) == pytest.approx(math.log(2) / math.log(10), abs=1e-12)


def test_familiarity_extremes():
    pop = PopStats(counts={"top": 99}, max_count=99)
    assert familiarity("absent", pop) == 0.0
    assert familiarity("top", pop) == pytest.approx(1.0)


def test_familiarity_hand_value():
    pop = PopStats(counts={"w": 9, "top": 99}, max_count=99)
    assert familiarity("w", pop) == pytest.approx(0.5, abs=1e-12)


def _brute_force_df(docs):
    df = {}
    for doc in docs:
        for word in set(doc):
            df[word] = df.get(word, 0) + 1
    return df


def test_df_matches_brute_force_scan():
    rng = random.Random(42)
    vocab = ["alpha", "beta", "gamma", "delta", "epsilon", "zeta"]
    for _ in range(200):
        docs = [
            [rng.choice(vocab) for _ in range(rng.randint(1, 8))]
            for _ in range(rng.randint(1, 10))
        ]
        titles = [tokenize(" ".join(doc), str(i)) for i, doc in enumerate(docs)]
        ctx = build_context_model(titles)
        assert dict(ctx.df) == _brute_force_df(docs)
        assert ctx.doc_count == len(docs)


def test_rebuild_order_independence():
    texts = ["big data", "big ideas", "small data", "tiny details"]
    entries = [("death", 9), ("war film", 3), ("death", 1)]
    rng = random.Random(7)
    base_ctx = build_context_model(_titles(*texts))
    base_pop = build_pop_model(entries)
    for _ in range(20):
        shuffled_texts = texts[:]
        rng.shuffle(shuffled_texts)
        shuffled_entries = entries[:]
        rng.shuffle(shuffled_entries)
        ctx = build_context_model(
            [tokenize(t, str(i)) for i, t in enumerate(shuffled_texts)]
        )
        pop = build_pop_model(shuffled_entries)
        assert dict(ctx.df) == dict(base_ctx.df) and ctx.doc_count == base_ctx.doc_count
        assert dict(pop.counts) == dict(base_pop.counts) and pop.max_count == base_pop.max_count


def test_score_bounds_and_monotonicity():
    rng = random.Random(99)
    for _ in range(300):
        n = rng.randint(1, 50)
        ctx_scores = [novelty("w", ContextStats(n, {"w": df})) for df in range(n + 1)]
        assert all(0.0 <= s <= 1.0 for s in ctx_scores)
        assert all(a > b for a, b in zip(ctx_scores, ctx_scores[1:]))
        max_count = rng.randint(1, 10_000)
        pop_scores = [
            familiarity("w", PopStats({"w": c, "m": max_count}, max_count))
            for c in range(0, max_count + 1, max(1, max_count // 17))
        ]
        assert all(0.0 <= s <= 1.0 for s in pop_scores)
        assert all(a < b for a, b in zip(pop_scores, pop_scores[1:]))


def test_model_save_load_round_trip(model, tmp_path):
    path = tmp_path / "model.json"
    save_model(model, path)
    loaded = load_model(path)
    assert loaded.context.doc_count == model.context.doc_count
    assert dict(loaded.context.df) == dict(model.context.df)
    assert dict(loaded.popularity.counts) == dict(model.popularity.counts)
    assert loaded.popularity.max_count == model.popularity.max_count
    assert loaded.stopword_hash == model.stopword_hash
    assert loaded.min_len == model.min_len


def test_model_file_version_check(model, tmp_path):
    path = tmp_path / "model.json"
    save_model(model, path)
    content = path.read_text().replace('"format_version": 1', '"format_version": 99')
    path.write_text(content)
    with pytest.raises(ValueError, match="format_version"):
        load_model(path)


def test_load_model_missing():
    with pytest.raises(ResourceMissing):
        load_model("/nonexistent/model.json")


def test_read_context_corpus_plain_and_jsonl(tmp_path):
    plain = tmp_path / "plain.txt"
    plain.write_text("first title\n\nsecond title\n")
    titles = read_context_corpus(plain)
    assert [t.raw for t in titles] == ["first title", "second title"]
    assert [t.id for t in titles] == ["1", "3"]

    jsonl = tmp_path / "titles.jsonl"
    jsonl.write_text('{"id": "a", "text": "first title"}\n{"id": "b", "text": "second"}\n')
    titles = read_context_corpus(jsonl)
    assert [(t.id, t.raw) for t in titles] == [("a", "first title"), ("b", "second")]


def test_read_context_corpus_bad_jsonl(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"id": "a", "text": "ok"}\n{"id": "b"}\n')
    with pytest.raises(MalformedRecord) as exc_info:
        read_context_corpus(path)
    assert exc_info.value.line_no == 2


def test_read_pop_corpus(tmp_path):
    path = tmp_path / "pop.tsv"
    path.write_text("death\t950\nhero\n\nserial killer\t310\n")
    entries = read_pop_corpus(path)
    assert entries == [("death", 950), ("hero", 1), ("serial killer", 310)]


def test_read_pop_corpus_malformed(tmp_path):
    path = tmp_path / "pop.tsv"
    path.write_text("death\tnot-a-number\n")
    with pytest.raises(MalformedRecord) as exc_info:
        read_pop_corpus(path)
    assert exc_info.value.line_no == 1
