"""tensilex: dual-scale stress/relaxation strength scoring for short texts.

A lexicon-plus-rules engine scores each text from -1 (no stress) to -5
(extremely stressed) and, in parallel, from 1 (not relaxing) to 5
(completely relaxed), with a supervised hill-climbing lexicon optimizer,
agreement and evaluation metrics, and an n-gram ML baseline.
"""

from .lexicon import (
    BoosterEntry,
    EmoticonEntry,
    IdiomEntry,
    Kind,
    LexiconEntry,
    LexiconSet,
    load_lexicon_set,
    lookup,
    save_lexicon_set,
    set_strength,
)
from .metrics import (
    CodingMatrix,
    MetricsReport,
    PairedSeries,
    cross_tab,
    exact_within1,
    krippendorff_alpha_weighted,
    mad,
    pearson,
)
from .optimizer import OptimizationReport, OptimizerConfig, hill_climb, total_absolute_error
from .scorer import DualScore, ScoreTrace, explain, replay_trace, score_sentence, score_text
from .textproc import Token, TokenizedText, correct_spelling, process, segment_sentences, tokenize

__all__ = [
    "BoosterEntry", "EmoticonEntry", "IdiomEntry", "Kind", "LexiconEntry", "LexiconSet",
    "load_lexicon_set", "lookup", "save_lexicon_set", "set_strength",
    "CodingMatrix", "MetricsReport", "PairedSeries", "cross_tab", "exact_within1",
    "krippendorff_alpha_weighted", "mad", "pearson",
    "OptimizationReport", "OptimizerConfig", "hill_climb", "total_absolute_error",
    "DualScore", "ScoreTrace", "explain", "replay_trace", "score_sentence", "score_text",
    "Token", "TokenizedText", "correct_spelling", "process", "segment_sentences", "tokenize",
]

__version__ = "0.1.0"
