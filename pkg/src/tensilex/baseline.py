"""Generic n-gram machine-learning baseline.

Features are all unigrams, bigrams and trigrams over the tweet tokenizer's
output (punctuation runs are single terms; bigrams and trigrams never
cross a sentence boundary), plus three dense counts: the text's total
numbers of unigrams, bigrams and trigrams. Information gain over
presence/absence ranks the sparse features; the dense counts are always
retained alongside the selected subset. Two classifiers predict the
5-level code of one scale: multinomial Naive Bayes with add-one smoothing
and one-vs-rest L2 logistic regression trained by full-batch gradient
descent.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateLabels, EmptyCorpus
from .metrics import MetricsReport, PairedSeries, exact_within1, mad, pearson
from .textproc import segment_sentences, tokenize

DENSE_FEATURES = ("<n_unigrams>", "<n_bigrams>", "<n_trigrams>")

MODEL_FORMAT_VERSION = 1


@dataclass(frozen=True)
class FeatureVector:
    counts: dict[str, int]  # sparse n-gram counts
    n_unigrams: int
    n_bigrams: int
    n_trigrams: int

    def value(self, feature: str) -> int:
        if feature == "<n_unigrams>":
            return self.n_unigrams
        if feature == "<n_bigrams>":
            return self.n_bigrams
        if feature == "<n_trigrams>":
            return self.n_trigrams
        return self.counts.get(feature, 0)


@dataclass(frozen=True)
class FeatureTable:
    vocabulary: tuple[str, ...]  # sparse features only, ids dense 0..V-1
    doc_freq: tuple[int, ...]
    gains: tuple[float, ...]


@dataclass(frozen=True)
class TrainedModel:
    kind: str  # "nb" | "logistic"
    classes: tuple[int, ...]
    subset: tuple[str, ...]  # frozen feature subset incl. dense counts
    neutral: int  # tie-break target code (-1 or 1)
    # nb: log prior per class, log likelihood per class x feature
    # logistic: weight matrix per class x (features + bias)
    params: dict[str, np.ndarray]


def extract_features(text: str) -> FeatureVector:
    counts: Counter[str] = Counter()
    uni = bi = tri = 0
    for sentence in segment_sentences(text):
        tokens = [t.normalized for t in tokenize(sentence)]
        uni += len(tokens)
        bi += max(0, len(tokens) - 1)
        tri += max(0, len(tokens) - 2)
        for size in (1, 2, 3):
            for i in range(len(tokens) - size + 1):
                counts[" ".join(tokens[i:i + size])] += 1
    return FeatureVector(dict(counts), uni, bi, tri)


def _entropy(label_counts) -> float:
    total = sum(label_counts)
    h = 0.0
    for c in label_counts:
        if c:
            p = c / total
            h -= p * math.log2(p)
    return h


def information_gain(vectors, labels) -> FeatureTable:
    """Rank sparse features by reduction in label entropy (presence/absence)."""
    if len(set(labels)) < 2:
        raise DegenerateLabels("information gain needs at least 2 distinct labels")
    n = len(vectors)
    label_values = sorted(set(labels))
    label_index = {y: i for i, y in enumerate(label_values)}
    total_counts = [0] * len(label_values)
    for y in labels:
        total_counts[label_index[y]] += 1
    h_y = _entropy(total_counts)

    present: dict[str, list[int]] = {}
    doc_freq: Counter[str] = Counter()
    for vec, y in zip(vectors, labels):
        for feature, count in vec.counts.items():
            if count > 0:
                doc_freq[feature] += 1
                present.setdefault(feature, [0] * len(label_values))[label_index[y]] += 1

    vocabulary = sorted(present)
    gains = []
    for feature in vocabulary:
        with_f = present[feature]
        n_with = sum(with_f)
        without_f = [t - w for t, w in zip(total_counts, with_f)]
        n_without = n - n_with
        h_cond = 0.0
        if n_with:
            h_cond += (n_with / n) * _entropy(with_f)
        if n_without:
            h_cond += (n_without / n) * _entropy(without_f)
        gains.append(max(0.0, h_y - h_cond))
    return FeatureTable(tuple(vocabulary), tuple(doc_freq[f] for f in vocabulary), tuple(gains))


def select_top(table: FeatureTable, n: int) -> tuple[str, ...]:
    """Top-n sparse features by gain (ties lexicographic) plus dense counts."""
    if n < 1:
        raise ValueError("n must be >= 1")
    ranked = sorted(zip(table.vocabulary, table.gains), key=lambda fg: (-fg[1], fg[0]))
    chosen = tuple(f for f, _ in ranked[:n])
    return chosen + DENSE_FEATURES


def _design_matrix(vectors, subset) -> np.ndarray:
    x = np.zeros((len(vectors), len(subset)))
    for i, vec in enumerate(vectors):
        for j, feature in enumerate(subset):
            x[i, j] = vec.value(feature)
    return x


@dataclass(frozen=True)
class LogisticConfig:
    l2: float = 1e-2
    step_size: float = 0.1
    max_epochs: int = 500
    tolerance: float = 1e-6


def _neutral_code(classes) -> int:
    return min(classes, key=abs)


def train(kind: str, vectors, labels, subset,
          logistic_config: LogisticConfig = LogisticConfig()) -> TrainedModel:
    if not vectors:
        raise EmptyCorpus("empty training set")
    classes = tuple(sorted(set(labels)))
    x = _design_matrix(vectors, subset)
    y = np.array(labels)

    if kind == "nb":
        log_prior = np.zeros(len(classes))
        log_like = np.zeros((len(classes), len(subset)))
        for ci, c in enumerate(classes):
            rows = x[y == c]
            log_prior[ci] = math.log(len(rows) / len(vectors))
            totals = rows.sum(axis=0) + 1.0  # add-one smoothing
            log_like[ci] = np.log(totals / totals.sum())
        params = {"log_prior": log_prior, "log_like": log_like}
    elif kind == "logistic":
        params = {"weights": _train_logistic(x, y, classes, logistic_config)}
    else:
        raise ValueError(f"unknown classifier kind {kind!r}")

    return TrainedModel(kind, classes, tuple(subset), _neutral_code(classes), params)


def _train_logistic(x, y, classes, cfg: LogisticConfig) -> np.ndarray:
    n, f = x.shape
    xb = np.hstack([x, np.ones((n, 1))])
    # Step size capped at 1/L (L = Lipschitz bound of the gradient) so the
    # full-batch loss is provably non-increasing per epoch.
    lipschitz = 0.25 * float((xb * xb).sum()) / n + cfg.l2
    lr = min(cfg.step_size, 1.0 / lipschitz)
    weights = np.zeros((len(classes), f + 1))
    for ci, c in enumerate(classes):
        target = np.where(y == c, 1.0, -1.0)
        w = np.zeros(f + 1)
        prev_loss = None
        for _ in range(cfg.max_epochs):
            margin = target * (xb @ w)
            loss = float(np.mean(np.logaddexp(0.0, -margin))) + 0.5 * cfg.l2 * float(w[:-1] @ w[:-1])
            if prev_loss is not None:
                assert loss <= prev_loss + 1e-12, "logistic loss increased"
                if prev_loss - loss < cfg.tolerance:
                    break
            prev_loss = loss
            sig = 1.0 / (1.0 + np.exp(np.clip(margin, -500, 500)))
            grad = -(xb * (target * sig)[:, None]).mean(axis=0)
            grad[:-1] += cfg.l2 * w[:-1]
            w = w - lr * grad
        weights[ci] = w
    return weights


def _scores(model: TrainedModel, vec: FeatureVector) -> np.ndarray:
    x = np.array([vec.value(f) for f in model.subset], dtype=float)
    if model.kind == "nb":
        return model.params["log_prior"] + model.params["log_like"] @ x
    xb = np.append(x, 1.0)
    return model.params["weights"] @ xb


def posterior(model: TrainedModel, vec: FeatureVector) -> dict[int, float]:
    """Class posterior probabilities (softmax over the model's log scores)."""
    scores = _scores(model, vec)
    scores = scores - scores.max()
    p = np.exp(scores)
    p /= p.sum()
    return dict(zip(model.classes, p.tolist()))


def predict(model: TrainedModel, vec: FeatureVector) -> int:
    """Argmax class; ties break toward the code nearer neutral, then lower."""
    scores = _scores(model, vec)
    order = sorted(range(len(model.classes)),
                   key=lambda i: (abs(model.classes[i] - model.neutral), model.classes[i]))
    best = order[0]
    for i in order[1:]:
        if scores[i] > scores[best]:
            best = i
    return model.classes[best]


SWEEP_GRID = tuple(range(100, 1001, 100))


def crossval_baseline(corpus, scale: str, kind: str, n_features: int,
                      k: int = 10, reps: int = 30, base_seed: int = 0):
    """Repeated k-fold CV of one classifier at one feature-set size.

    Feature selection happens inside each training fold. Returns the
    repetition-averaged report for the requested scale.
    """
    from .corpus import AveragedReport, _average, make_folds  # late: avoid cycle at import time

    if scale not in ("stress", "relax"):
        raise ValueError(f"unknown scale {scale!r}")
    label_of = (lambda ex: ex.gold_stress) if scale == "stress" else (lambda ex: ex.gold_relax)
    vectors = {ex.id: extract_features(ex.text) for ex in corpus}

    rep_reports = []
    for rep in range(reps):
        plan = make_folds(corpus, k, base_seed * 1_000_003 + rep)
        preds, golds = [], []
        for fold in range(k):
            held = plan.fold_ids(fold)
            train_ex = [ex for ex in corpus if ex.id not in held]
            test_ex = [ex for ex in corpus if ex.id in held]
            train_vecs = [vectors[ex.id] for ex in train_ex]
            train_labels = [label_of(ex) for ex in train_ex]
            table = information_gain(train_vecs, train_labels)
            subset = select_top(table, n_features)
            model = train(kind, train_vecs, train_labels, subset)
            for ex in test_ex:
                preds.append(predict(model, vectors[ex.id]))
                golds.append(label_of(ex))
        series = PairedSeries(tuple(preds), tuple(golds))
        rep_reports.append(MetricsReport(len(preds), *exact_within1(series),
                                         pearson(series), mad(series)))
    return _average(rep_reports, len(corpus))


def sweep(corpus, scale: str, kinds=("nb", "logistic"), grid=SWEEP_GRID,
          k: int = 10, reps: int = 30, base_seed: int = 0):
    """Feature-count sweep; returns rows plus the best cell per metric."""
    rows = []
    for kind in kinds:
        for n in grid:
            rows.append((kind, n, scale, crossval_baseline(corpus, scale, kind, n, k, reps, base_seed)))
    best = {
        "exact": max(rows, key=lambda r: r[3].exact_pct),
        "within1": max(rows, key=lambda r: r[3].within1_pct),
        "pearson": max(rows, key=lambda r: -1.0 if r[3].pearson is None else r[3].pearson),
        "mad": min(rows, key=lambda r: r[3].mad),
    }
    return rows, best


def save_model(model: TrainedModel, path) -> None:
    payload = {
        "version": MODEL_FORMAT_VERSION,
        "kind": model.kind,
        "classes": list(model.classes),
        "subset": list(model.subset),
        "neutral": model.neutral,
        "params": {k: v.tolist() for k, v in model.params.items()},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)


def load_model(path) -> TrainedModel:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("version") != MODEL_FORMAT_VERSION:
        raise ValueError(f"unsupported model version {payload.get('version')!r}")
    return TrainedModel(payload["kind"], tuple(payload["classes"]), tuple(payload["subset"]),
                        payload["neutral"],
                        {k: np.array(v) for k, v in payload["params"].items()})
