from pathlib import Path

import pytest

from stickywords.corpus import (
    FrequencyModel,
    build_context_model,
    build_pop_model,
    read_context_corpus,
    read_pop_corpus,
)
from stickywords.scoring import ScoreConfig
from stickywords.sentiment import load_lexicon
from stickywords.substitution import load_thesaurus
from stickywords.text import stopword_hash

FIXTURES = Path(__file__).parent / "fixtures"

TABLE2_ORIGINALS = [
    "End of the library: does digital ubiquity endangers traditional channels of organized information?",
    "Reproductive activity and the lifespan of male fruit flies",
    "Be a civic leader: how to effectively use open data for digital government",
]
TABLE2_TREATMENTS = [
    "Death of the library: does digital ubiquity endangers traditional channels of organized information?",
    "Sexual activity and the lifespan of male fruit flies",
    "Be a civic hero: how to effectively use open data for digital government",
]
TABLE2_REPLACEMENTS = [("end", "death"), ("reproductive", "sexual"), ("leader", "hero")]


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def config():
    return ScoreConfig()


@pytest.fixture(scope="session")
def model(config):
    context = build_context_model(read_context_corpus(FIXTURES / "context_titles.txt"))
    popularity = build_pop_model(read_pop_corpus(FIXTURES / "pop_keywords.tsv"))
    return FrequencyModel(
        context=context,
        popularity=popularity,
        stopword_hash=stopword_hash(config.stopwords),
        min_len=config.min_len,
    )


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(FIXTURES / "sentiment_lexicon.tsv")


@pytest.fixture(scope="session")
def thesaurus():
    return load_thesaurus(FIXTURES / "thesaurus.tsv")


@pytest.fixture()
def model_file(model, tmp_path):
    from stickywords.corpus import save_model

    path = tmp_path / "model.json"
    save_model(model, path)
    return path
