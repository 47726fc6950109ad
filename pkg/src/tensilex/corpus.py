"""Annotated corpora: loading, gold aggregation, slicing, folds, and the
repeated k-fold cross-validation driver for supervised runs.

Corpus TSV format (UTF-8, ``#`` comments allowed)::

    id<TAB>subcorpus<TAB>text<TAB>stress_codes<TAB>relax_codes

where the code columns hold comma-separated per-coder integers, e.g.
``-1,-2,-2`` and ``1,1,2``. Gold scores are the per-coder mean, kept both
raw and rounded half away from zero.

All randomness derives from an explicit base seed: repetition ``r`` uses
fold seed ``base_seed * 1000003 + r`` and the optimizer run on fold ``f``
of that repetition uses ``(base_seed * 1000003 + r) * 101 + f``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

from .errors import EmptyCorpus, ParseError, TooSmall
from .metrics import MetricsReport, PairedSeries, exact_within1, mad, pearson
from .optimizer import OptimizerConfig, hill_climb
from .scorer import score_text


@dataclass(frozen=True)
class AnnotatedExample:
    id: str
    text: str
    coder_stress: tuple[int, ...]  # each in -5..-1
    coder_relax: tuple[int, ...]  # each in 1..5
    subcorpus: str
    gold_stress: int
    gold_relax: int
    gold_stress_raw: float
    gold_relax_raw: float


@dataclass(frozen=True)
class FoldPlan:
    k: int
    seed: int
    assignment: dict[str, int]  # example id -> fold index

    def fold_ids(self, fold: int) -> set[str]:
        return {ex_id for ex_id, f in self.assignment.items() if f == fold}


def round_half_away(x: float) -> int:
    """Round to nearest integer, ties away from zero (-1.5 -> -2)."""
    return int(math.copysign(math.floor(abs(x) + 0.5), x))


def _parse_codes(text, row, low, high):
    codes = []
    for piece in text.split(","):
        try:
            value = int(piece)
        except ValueError:
            raise ParseError(f"bad code {piece!r}", line=row) from None
        if not low <= value <= high:
            raise ParseError(f"code {value} outside {low}..{high}", line=row)
        codes.append(value)
    if not codes:
        raise ParseError("empty code list", line=row)
    return tuple(codes)


def make_example(ex_id, subcorpus, text, stress_codes, relax_codes) -> AnnotatedExample:
    stress_raw = sum(stress_codes) / len(stress_codes)
    relax_raw = sum(relax_codes) / len(relax_codes)
    return AnnotatedExample(ex_id, text, tuple(stress_codes), tuple(relax_codes), subcorpus,
                            round_half_away(stress_raw), round_half_away(relax_raw),
                            stress_raw, relax_raw)


def load_corpus(path) -> list[AnnotatedExample]:
    examples = []
    with open(path, encoding="utf-8") as fh:
        header_seen = False
        for row, line in enumerate(fh, start=1):
            text = line.rstrip("\n")
            if not text.strip() or text.lstrip().startswith("#"):
                continue
            if not header_seen:
                header_seen = True  # first data line is the header
                continue
            cols = text.split("\t")
            if len(cols) != 5:
                raise ParseError(f"expected 5 columns, got {len(cols)}", line=row)
            ex_id, subcorpus, body, stress_text, relax_text = cols
            stress_codes = _parse_codes(stress_text, row, -5, -1)
            relax_codes = _parse_codes(relax_text, row, 1, 5)
            if len(stress_codes) != len(relax_codes):
                raise ParseError("coder count differs between scales", line=row)
            examples.append(make_example(ex_id, subcorpus, body, stress_codes, relax_codes))
    return examples


def save_corpus(examples, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("id\tsubcorpus\ttext\tstress_codes\trelax_codes\n")
        for ex in examples:
            fh.write(f"{ex.id}\t{ex.subcorpus}\t{ex.text}\t"
                     f"{','.join(map(str, ex.coder_stress))}\t"
                     f"{','.join(map(str, ex.coder_relax))}\n")


def slice_corpus(corpus, subcorpus_label) -> list[AnnotatedExample]:
    """Examples with the given sub-corpus label (may be empty)."""
    return [ex for ex in corpus if ex.subcorpus == subcorpus_label]


def make_folds(corpus, k: int, seed: int) -> FoldPlan:
    """Seeded shuffle then round-robin assignment; fold sizes differ by <= 1."""
    if len(corpus) < k:
        raise TooSmall(f"corpus of {len(corpus)} examples cannot make {k} folds")
    order = list(range(len(corpus)))
    random.Random(seed).shuffle(order)
    assignment = {corpus[idx].id: pos % k for pos, idx in enumerate(order)}
    return FoldPlan(k, seed, assignment)


def _mixed_report(preds, golds_rounded, golds_raw, unrounded) -> MetricsReport:
    # Exact/within-1 always compare against rounded codes; with unrounded
    # golds, MAD and the correlation use the raw coder means.
    rounded = PairedSeries(tuple(preds), tuple(golds_rounded))
    exact, within1 = exact_within1(rounded)
    scored = PairedSeries(tuple(preds), tuple(golds_raw)) if unrounded else rounded
    return MetricsReport(len(preds), exact, within1, pearson(scored), mad(scored))


def evaluate_lexicon(lex, corpus, unrounded: bool = False) -> dict[str, MetricsReport]:
    """Unsupervised evaluation: score every text with the lexicon as-is."""
    if not corpus:
        raise EmptyCorpus("cannot evaluate an empty corpus")
    recognised = lex.recognised_words
    stress_pred, relax_pred = [], []
    for ex in corpus:
        score, _ = score_text(ex.text, lex, recognised)
        stress_pred.append(score.stress)
        relax_pred.append(score.relaxation)
    return {
        "stress": _mixed_report(stress_pred, [e.gold_stress for e in corpus],
                                [e.gold_stress_raw for e in corpus], unrounded),
        "relax": _mixed_report(relax_pred, [e.gold_relax for e in corpus],
                               [e.gold_relax_raw for e in corpus], unrounded),
    }


@dataclass
class CrossValResult:
    k: int
    reps: int
    base_seed: int
    averaged: dict[str, "AveragedReport"]
    rep_reports: list[dict[str, MetricsReport]]  # per repetition, pooled
    log_rows: list[tuple] = field(default_factory=list)  # (rep, fold, scale, report)

    LOG_HEADER = "rep\tfold\tscale\t" + MetricsReport.TSV_HEADER

    def log_tsv(self):
        yield self.LOG_HEADER
        for rep, fold, scale, rpt in self.log_rows:
            yield f"{rep}\t{fold}\t{scale}\t{rpt.tsv_row()}"


@dataclass(frozen=True)
class AveragedReport:
    n: int
    reps: int
    exact_pct: float
    within1_pct: float
    pearson: float | None
    pearson_skipped: int  # repetitions with undefined correlation
    mad: float

    TSV_HEADER = "n\treps\texact\twithin1\tpearson\tpearson_skipped\tmad"

    def tsv_row(self) -> str:
        r = "NA" if self.pearson is None else f"{self.pearson:.3f}"
        return (f"{self.n}\t{self.reps}\t{self.exact_pct:.3f}\t{self.within1_pct:.3f}"
                f"\t{r}\t{self.pearson_skipped}\t{self.mad:.3f}")


def _average(reports: list[MetricsReport], n: int) -> AveragedReport:
    defined = [r.pearson for r in reports if r.pearson is not None]
    avg_pearson = sum(defined) / len(defined) if defined else None
    return AveragedReport(
        n=n,
        reps=len(reports),
        exact_pct=sum(r.exact_pct for r in reports) / len(reports),
        within1_pct=sum(r.within1_pct for r in reports) / len(reports),
        pearson=avg_pearson,
        pearson_skipped=len(reports) - len(defined),
        mad=sum(r.mad for r in reports) / len(reports),
    )


def crossval_supervised(lex, corpus, k: int = 10, reps: int = 30, base_seed: int = 0,
                        cfg: OptimizerConfig | None = None,
                        supervised: bool = True) -> CrossValResult:
    """Repeated k-fold cross validation; repetition-level metrics averaged.

    With ``supervised=False`` the hill climb is skipped and the starting
    lexicon scores every held-out fold (the unsupervised protocol).
    """
    if not corpus:
        raise EmptyCorpus("cannot cross-validate an empty corpus")
    if len(corpus) < k:
        raise TooSmall(f"corpus of {len(corpus)} examples cannot make {k} folds")
    by_id = {ex.id: ex for ex in corpus}
    if len(by_id) != len(corpus):
        raise ParseError("duplicate example ids in corpus")

    rep_reports = []
    log_rows = []
    for rep in range(reps):
        rep_seed = base_seed * 1_000_003 + rep
        plan = make_folds(corpus, k, rep_seed)
        pooled = {"stress": ([], []), "relax": ([], [])}
        for fold in range(k):
            held_ids = plan.fold_ids(fold)
            train = [ex for ex in corpus if ex.id not in held_ids]
            test = [ex for ex in corpus if ex.id in held_ids]
            assert not held_ids & {ex.id for ex in train}
            if supervised:
                fold_cfg = OptimizerConfig(seed=rep_seed * 101 + fold,
                                           min_improvement=(cfg or OptimizerConfig()).min_improvement,
                                           max_passes=(cfg or OptimizerConfig()).max_passes)
                fold_lex, _ = hill_climb(lex, train, fold_cfg)
            else:
                fold_lex = lex
            recognised = fold_lex.recognised_words
            fold_preds = {"stress": ([], []), "relax": ([], [])}
            for ex in test:
                score, _ = score_text(ex.text, fold_lex, recognised)
                for scale, pred, gold in (("stress", score.stress, ex.gold_stress),
                                          ("relax", score.relaxation, ex.gold_relax)):
                    pooled[scale][0].append(pred)
                    pooled[scale][1].append(gold)
                    fold_preds[scale][0].append(pred)
                    fold_preds[scale][1].append(gold)
            for scale in ("stress", "relax"):
                preds, golds = fold_preds[scale]
                series = PairedSeries(tuple(preds), tuple(golds))
                log_rows.append((rep, fold, scale,
                                 MetricsReport(len(preds), *exact_within1(series),
                                               pearson(series), mad(series))))
        rep_report = {}
        for scale in ("stress", "relax"):
            preds, golds = pooled[scale]
            series = PairedSeries(tuple(preds), tuple(golds))
            rep_report[scale] = MetricsReport(len(preds), *exact_within1(series),
                                              pearson(series), mad(series))
        rep_reports.append(rep_report)

    averaged = {scale: _average([r[scale] for r in rep_reports], len(corpus))
                for scale in ("stress", "relax")}
    return CrossValResult(k, reps, base_seed, averaged, rep_reports, log_rows)
