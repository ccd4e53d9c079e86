"""Sticky-word title analysis and optimization.

Evaluates short texts for engagement-driving words (familiar in popular
culture, novel in their context, emotive in polarity), proposes single-word
substitutions from a thesaurus for human review, and reproduces the
selection/evaluation statistics used to A/B test the rewrites.
"""

from .corpus import (
    ContextStats,
    FrequencyModel,
    PopStats,
    build_context_model,
    build_pop_model,
    familiarity,
    load_model,
    novelty,
    save_model,
)
from .scoring import ScoreConfig, StickyScore, load_config, title_score, word_stickiness
from .sentiment import Polarity, SentimentLexicon, load_lexicon, polarity
from .stats import (
    GroupSummary,
    LeveneResult,
    TTestResult,
    UESResponse,
    analyze_experiment,
    levene_test,
    pooled_t_test,
    summarize,
    ues_score,
    welch_t_test,
)
from .substitution import (
    SubstitutionCandidate,
    Thesaurus,
    apply_substitution,
    generate_candidates,
    load_thesaurus,
    review,
    synonyms_of,
)
from .text import Title, Token, is_content_word, load_stopwords, tokenize

__version__ = "0.1.0"

__all__ = [
    "ContextStats",
    "FrequencyModel",
    "GroupSummary",
    "LeveneResult",
    "Polarity",
    "ScoreConfig",
    "SentimentLexicon",
    "StickyScore",
    "SubstitutionCandidate",
    "TTestResult",
    "Thesaurus",
    "Title",
    "Token",
    "UESResponse",
    "analyze_experiment",
    "apply_substitution",
    "build_context_model",
    "build_pop_model",
    "familiarity",
    "generate_candidates",
    "is_content_word",
    "levene_test",
    "load_config",
    "load_lexicon",
    "load_model",
    "load_stopwords",
    "load_thesaurus",
    "novelty",
    "polarity",
    "pooled_t_test",
    "review",
    "save_model",
    "summarize",
    "synonyms_of",
    "title_score",
    "tokenize",
    "ues_score",
    "welch_t_test",
    "word_stickiness",
]
