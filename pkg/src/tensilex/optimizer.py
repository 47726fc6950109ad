"""Supervised mode: hill-climbing refinement of lexicon term strengths.

Each pass visits every stress and relaxation term in a seeded random
order (re-drawn per pass). For a term it first tries strength +1, keeping
the change only when the summed absolute error over both scales drops by
at least ``min_improvement``; otherwise it tries strength -1 the same
way; otherwise the term is left alone. The climb stops after a pass with
no kept changes, or at the safety cap.

Randomness comes from ``random.Random(seed)`` (CPython's Mersenne
Twister); the reproducibility contract is determinism for a given seed,
not a particular bitstream.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import lexicon as lx
from .errors import EmptyCorpus
from .scorer import score_tokenized
from .textproc import process


@dataclass(frozen=True)
class OptimizerConfig:
    seed: int = 0
    min_improvement: int = 2
    max_passes: int = 1000

    def __post_init__(self):
        if self.min_improvement < 1:
            raise ValueError("min_improvement must be >= 1")
        if self.max_passes < 1:
            raise ValueError("max_passes must be >= 1")


@dataclass(frozen=True)
class Change:
    kind: lx.Kind
    pattern: str
    old_strength: int
    new_strength: int
    error_before: int
    error_after: int


@dataclass
class OptimizationReport:
    passes_run: int = 0
    changes_made: int = 0
    initial_error: int = 0
    final_error: int = 0
    changes: list[Change] = field(default_factory=list)

    def log_lines(self):
        yield f"initial_error\t{self.initial_error}"
        for c in self.changes:
            yield (f"change\t{c.kind.value}\t{c.pattern}\t{c.old_strength}->{c.new_strength}"
                   f"\t{c.error_before}->{c.error_after}")
        yield f"passes_run\t{self.passes_run}"
        yield f"changes_made\t{self.changes_made}"
        yield f"final_error\t{self.final_error}"


def _example_error(doc, lex, gold_stress, gold_relax) -> int:
    score, _ = score_tokenized(doc, lex)
    return abs(score.stress - gold_stress) + abs(score.relaxation - gold_relax)


def total_absolute_error(lex: lx.LexiconSet, corpus) -> int:
    """Summed |prediction - gold| over both scales, over the whole corpus."""
    if not corpus:
        raise EmptyCorpus("cannot evaluate an empty corpus")
    recognised = lex.recognised_words
    total = 0
    for ex in corpus:
        doc = process(ex.text, recognised)
        total += _example_error(doc, lex, ex.gold_stress, ex.gold_relax)
    return total


class _ErrorTracker:
    """Incremental corpus error: re-scores only the examples a term can touch.

    Which lexicon entry a token matches depends only on patterns, never on
    strengths, so the affected-example index stays valid across strength
    edits. The index is a superset (idiom masking may hide a match) which
    only costs a little extra re-scoring.
    """

    def __init__(self, lex, corpus):
        recognised = lex.recognised_words  # unchanged by strength edits
        self.docs = [process(ex.text, recognised) for ex in corpus]
        self.golds = [(ex.gold_stress, ex.gold_relax) for ex in corpus]
        self.affected: dict[tuple[lx.Kind, str], list[int]] = {}
        for i, doc in enumerate(self.docs):
            hit = set()
            for sentence in doc.sentences:
                for token in sentence:
                    for kind in (lx.Kind.STRESS, lx.Kind.RELAXATION):
                        found = lx.lookup(token.normalized, lex.terms(kind))
                        if found is not None:
                            hit.add((kind, found[0].pattern))
            for key in hit:
                self.affected.setdefault(key, []).append(i)
        self.errors = [_example_error(doc, lex, gs, gr)
                       for doc, (gs, gr) in zip(self.docs, self.golds)]
        self.total = sum(self.errors)

    def total_with(self, lex, key) -> tuple[int, list[int]]:
        """Total error under a candidate lexicon differing only at `key`."""
        total = self.total
        updates = []
        for i in self.affected.get(key, ()):
            gs, gr = self.golds[i]
            new = _example_error(self.docs[i], lex, gs, gr)
            total += new - self.errors[i]
            updates.append(new)
        return total, updates

    def accept(self, key, total, updates):
        for i, new in zip(self.affected.get(key, ()), updates):
            self.errors[i] = new
        self.total = total


def hill_climb(lex: lx.LexiconSet, corpus, cfg: OptimizerConfig = OptimizerConfig()):
    """Refine term strengths against the corpus; returns (lexicon, report)."""
    if not corpus:
        raise EmptyCorpus("cannot optimize against an empty corpus")
    rng = random.Random(cfg.seed)
    tracker = _ErrorTracker(lex, corpus)
    report = OptimizationReport(initial_error=tracker.total)

    terms = ([(lx.Kind.STRESS, e.pattern) for e in lex.stress_terms]
             + [(lx.Kind.RELAXATION, e.pattern) for e in lex.relax_terms])

    current = lex
    for _ in range(cfg.max_passes):
        report.passes_run += 1
        order = list(terms)
        rng.shuffle(order)
        changed = False
        for key in order:
            kind, pattern = key
            entry = next(e for e in current.terms(kind) if e.pattern == pattern)
            for new_strength in (entry.strength + 1, entry.strength - 1):
                if not 1 <= new_strength <= 5:
                    continue
                candidate = lx.set_strength(current, kind, pattern, new_strength)
                total, updates = tracker.total_with(candidate, key)
                if tracker.total - total >= cfg.min_improvement:
                    report.changes.append(Change(kind, pattern, entry.strength, new_strength,
                                                 tracker.total, total))
                    report.changes_made += 1
                    tracker.accept(key, total, updates)
                    current = candidate
                    changed = True
                    break
        if not changed:
            break

    report.final_error = tracker.total
    return current, report
