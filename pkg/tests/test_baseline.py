import math
import random

import pytest

from tensilex.baseline import (
    DENSE_FEATURES,
    SWEEP_GRID,
    crossval_baseline,
    extract_features,
    information_gain,
    load_model,
    posterior,
    predict,
    save_model,
    select_top,
    train,
)
from tensilex.corpus import make_example
from tensilex.errors import DegenerateLabels, EmptyCorpus

from .oracles import information_gain_bruteforce


def test_bigrams_do_not_cross_sentences():
    vec = extract_features("I am late. Very late.")
    assert "am late" in vec.counts
    assert "late very" not in vec.counts
    assert "late ." in vec.counts  # terminator punctuation is a term


def test_ngram_counting():
    vec = extract_features("go go go")
    assert vec.counts["go"] == 3
    assert vec.counts["go go"] == 2
    assert vec.counts["go go go"] == 1
    assert (vec.n_unigrams, vec.n_bigrams, vec.n_trigrams) == (3, 2, 1)


def test_punct_run_is_single_term():
    vec = extract_features("so slow !!!")
    assert "!!!" in vec.counts
    assert vec.n_unigrams == 3


def test_dense_counts_across_sentences():
    vec = extract_features("a b. c d e")
    # unigrams 6 (terminator token included), bigrams 1+3, trigrams 0+2
    assert vec.n_unigrams == 6
    assert vec.n_bigrams == 4
    assert vec.n_trigrams == 2


def corpus_vectors(texts, labels):
    return [extract_features(t) for t in texts], list(labels)


def test_gain_perfect_binary_predictor():
    texts = ["signal one", "signal two", "plain one", "plain two"]
    vectors, labels = corpus_vectors(texts, [1, 1, 2, 2])
    table = information_gain(vectors, labels)
    gains = dict(zip(table.vocabulary, table.gains))
    assert gains["signal"] == pytest.approx(1.0)


def test_gain_zero_for_ubiquitous_feature():
    texts = ["common a", "common b", "common c", "common d"]
    vectors, labels = corpus_vectors(texts, [1, 1, 2, 2])
    table = information_gain(vectors, labels)
    gains = dict(zip(table.vocabulary, table.gains))
    assert gains["common"] == 0.0


def test_gain_matches_bruteforce_on_random_corpus():
    rng = random.Random(0)
    words = ["aa", "bb", "cc", "dd", "ee"]
    texts = [" ".join(rng.choices(words, k=rng.randint(1, 5))) for _ in range(30)]
    labels = [rng.choice([1, 2, 3]) for _ in range(30)]
    vectors = [extract_features(t) for t in texts]
    table = information_gain(vectors, labels)
    h_y = information_gain_bruteforce([True] * 30, labels) + 0  # H(Y) via oracle with trivial split
    for feature, gain in zip(table.vocabulary, table.gains):
        presence = [vec.counts.get(feature, 0) > 0 for vec in vectors]
        assert gain == pytest.approx(information_gain_bruteforce(presence, labels), abs=1e-12)
        assert 0.0 <= gain <= math.log2(3) + 1e-12
    assert h_y == pytest.approx(0.0, abs=1e-12)  # ubiquitous split carries no information


def test_gain_single_label_rejected():
    vectors, labels = corpus_vectors(["a", "b"], [1, 1])
    with pytest.raises(DegenerateLabels):
        information_gain(vectors, labels)


def test_select_top_caps_at_vocabulary():
    vectors, labels = corpus_vectors(["aa bb", "cc dd"], [1, 2])
    table = information_gain(vectors, labels)
    subset = select_top(table, 1000)
    assert set(subset) == set(table.vocabulary) | set(DENSE_FEATURES)


def test_select_top_tie_breaks_lexicographically():
    vectors, labels = corpus_vectors(["zz one", "aa two"], [1, 2])
    table = information_gain(vectors, labels)
    subset = select_top(table, 1)
    assert subset[0] == "aa"  # all gains equal; lexicographically smallest wins


def test_sweep_grid_matches_protocol():
    assert SWEEP_GRID == tuple(range(100, 1001, 100))


def test_logistic_separable_reaches_train_accuracy():
    texts = ["good day today", "good sunny day", "bad day today", "bad rainy day"]
    vectors, labels = corpus_vectors(texts, [1, 1, 2, 2])
    table = information_gain(vectors, labels)
    model = train("logistic", vectors, labels, select_top(table, 10))
    assert [predict(model, v) for v in vectors] == labels


def test_nb_prior_dominance_single_example():
    vectors, labels = corpus_vectors(["only text"], [3])
    model = train("nb", vectors, labels, ("only", "text") + DENSE_FEATURES)
    assert predict(model, extract_features("anything else")) == 3


def test_nb_posterior_matches_hand_computation():
    # two classes, two docs each over a two-word vocabulary
    texts = ["aa aa", "aa bb", "bb bb", "bb aa"]
    labels = [1, 1, 2, 2]
    vectors = [extract_features(t) for t in texts]
    model = train("nb", vectors, labels, ("aa", "bb"))
    # class 1: counts aa=3 bb=1 -> smoothed aa 4/6, bb 2/6; class 2 mirrored
    query = extract_features("aa")
    post = posterior(model, query)
    j1 = 0.5 * (4 / 6)
    j2 = 0.5 * (2 / 6)
    assert post[1] == pytest.approx(j1 / (j1 + j2), abs=1e-12)
    assert sum(post.values()) == pytest.approx(1.0, abs=1e-9)


def test_nb_posteriors_sum_to_one():
    rng = random.Random(3)
    words = ["aa", "bb", "cc"]
    texts = [" ".join(rng.choices(words, k=3)) for _ in range(20)]
    labels = [rng.choice([-1, -2, -3]) for _ in range(20)]
    vectors = [extract_features(t) for t in texts]
    model = train("nb", vectors, labels, ("aa", "bb", "cc") + DENSE_FEATURES)
    for _ in range(10):
        probe = extract_features(" ".join(rng.choices(words, k=4)))
        post = posterior(model, probe)
        assert sum(post.values()) == pytest.approx(1.0, abs=1e-9)
        assert all(p > 0 for p in post.values())


def test_predict_tiebreak_toward_neutral():
    # all-zero input and uniform priors leave every class tied
    vectors, labels = corpus_vectors(["aa", "bb", "cc"], [-1, -2, -3])
    model = train("nb", vectors, labels, ("zz",))
    empty = extract_features("")
    assert predict(model, empty) == -1


def test_train_empty_rejected():
    with pytest.raises(EmptyCorpus):
        train("nb", [], [], ())


def test_model_roundtrip(tmp_path):
    vectors, labels = corpus_vectors(["good day", "bad day"], [1, 2])
    table = information_gain(vectors, labels)
    model = train("logistic", vectors, labels, select_top(table, 5))
    path = str(tmp_path / "model.json")
    save_model(model, path)
    loaded = load_model(path)
    assert loaded.kind == model.kind and loaded.classes == model.classes
    probe = extract_features("good morning")
    assert predict(loaded, probe) == predict(model, probe)


def injected_token_corpus(n=40, seed=0):
    rng = random.Random(seed)
    fillers = ["alpha", "beta", "gamma", "delta"]
    examples = []
    for i in range(n):
        stressed = i % 2 == 0
        # both classes get four tokens so the dense length features carry
        # no signal; only the injected token separates them
        words = rng.choices(fillers, k=3 if stressed else 4)
        if stressed:
            words.insert(rng.randrange(len(words)), "zzzq")
        text = " ".join(words)
        stress = -3 if stressed else -1
        examples.append(make_example(f"b{i:03d}", "synthetic", text, (stress,), (1,)))
    return examples


def test_end_to_end_injected_token():
    corpus = injected_token_corpus()
    vectors = [extract_features(ex.text) for ex in corpus]
    labels = [ex.gold_stress for ex in corpus]
    table = information_gain(vectors, labels)
    top = max(zip(table.vocabulary, table.gains), key=lambda fg: fg[1])
    assert top[0] == "zzzq" and top[1] == pytest.approx(1.0)
    # selecting the single top feature isolates the injected token (plus the
    # always-kept dense counts, which carry no signal here)
    for kind in ("nb", "logistic"):
        rpt = crossval_baseline(corpus, "stress", kind, 1, k=4, reps=1, base_seed=0)
        assert rpt.exact_pct == 100.0


def test_crossval_baseline_deterministic():
    corpus = injected_token_corpus(seed=2)
    a = crossval_baseline(corpus, "stress", "nb", 10, k=4, reps=2, base_seed=7)
    b = crossval_baseline(corpus, "stress", "nb", 10, k=4, reps=2, base_seed=7)
    assert a == b
