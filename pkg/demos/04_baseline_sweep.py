"""The n-gram machine-learning baseline on a synthetic corpus.

One injected token fully determines the stress code, so information gain
should rank it first and both classifiers should score perfectly. Run
from the repo root:

    python3 demos/04_baseline_sweep.py
"""

import random

from tensilex.baseline import (
    crossval_baseline,
    extract_features,
    information_gain,
    select_top,
)
from tensilex.corpus import make_example

rng = random.Random(7)
fillers = ["window", "street", "coffee", "cloud", "paper"]
corpus = []
for i in range(60):
    stressed = i % 2 == 0
    words = rng.choices(fillers, k=3 if stressed else 4)
    if stressed:
        words.insert(rng.randrange(len(words)), "gridlock")
    corpus.append(make_example(f"m{i}", "demo", " ".join(words),
                               (-4 if stressed else -1,), (1,)))

vectors = [extract_features(ex.text) for ex in corpus]
labels = [ex.gold_stress for ex in corpus]
table = information_gain(vectors, labels)
ranked = sorted(zip(table.vocabulary, table.gains), key=lambda fg: -fg[1])

print("top features by information gain:")
for feature, gain in ranked[:5]:
    print(f"  {gain:.3f}  {feature!r}")

print(f"\nfrozen subset at n=1: {select_top(table, 1)}\n")

for kind in ("nb", "logistic"):
    rpt = crossval_baseline(corpus, "stress", kind, 1, k=5, reps=3, base_seed=1)
    print(f"{kind:>8}: exact {rpt.exact_pct:.1f}%  within1 {rpt.within1_pct:.1f}%  "
          f"MAD {rpt.mad:.3f}")
