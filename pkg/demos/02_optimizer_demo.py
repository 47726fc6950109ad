"""Hill-climbing recovery of perturbed term strengths.

A reference lexicon labels a synthetic corpus; we then damage five term
strengths and watch the optimizer climb back. Run from the repo root:

    python3 demos/02_optimizer_demo.py
"""

import random

from tensilex import Kind, LexiconEntry, LexiconSet, hill_climb, set_strength, total_absolute_error
from tensilex.corpus import make_example
from tensilex.optimizer import OptimizerConfig
from tensilex.scorer import score_text

rng = random.Random(0)

stress = tuple(LexiconEntry(f"stressor{i}", Kind.STRESS, 2 + i % 4) for i in range(10))
relax = tuple(LexiconEntry(f"soother{i}", Kind.RELAXATION, 2 + i % 4) for i in range(10))
fillers = ["about", "the", "morning", "today", "again", "nearby"]
words = {e.pattern for e in stress + relax} | set(fillers)
reference = LexiconSet(stress, relax, (), frozenset(), (), (), frozenset(words))

corpus = []
terms = [e.pattern for e in stress + relax]
for i in range(120):
    text = f"{rng.choice(fillers)} {terms[i % len(terms)]} {rng.choice(fillers)}"
    score, _ = score_text(text, reference)
    corpus.append(make_example(f"d{i}", "demo", text, (score.stress,), (score.relaxation,)))

damaged = reference
for pattern in ("stressor1", "stressor4", "soother2", "soother7", "stressor8"):
    kind = Kind.STRESS if pattern.startswith("stressor") else Kind.RELAXATION
    entry = next(e for e in damaged.terms(kind) if e.pattern == pattern)
    damaged = set_strength(damaged, kind, pattern, entry.strength + (1 if entry.strength < 5 else -1))

print(f"error with reference lexicon: {total_absolute_error(reference, corpus)}")
print(f"error after damaging 5 terms: {total_absolute_error(damaged, corpus)}\n")

optimized, report = hill_climb(damaged, corpus, OptimizerConfig(seed=42))
for line in report.log_lines():
    print(line)
print(f"\nrecovered reference lexicon: {optimized == reference}")
