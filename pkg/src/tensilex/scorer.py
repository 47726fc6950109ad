"""The rule engine: dual-scale scoring of sentences and texts.

Each sentence receives the magnitude of its strongest stress term and its
strongest relaxation term (baseline 1 on each scale when nothing matches),
after idiom overrides, emoticons, booster words, repeated-letter emphasis,
negation, and the sentence-level exclamation boost. A text takes the
extreme sentence value on each scale. Every score comes with a trace that
replays to the same numbers.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lexicon import Kind, LexiconSet, lookup
from .textproc import URL_TOKEN, Token, TokenizedText, process

STRESS_BASELINE = -1
RELAX_BASELINE = 1


class Source(enum.Enum):
    STRESS_TERM = "stress-term"
    RELAX_TERM = "relax-term"
    IDIOM = "idiom"
    EMOTICON = "emoticon"
    NEGATED_RELAX = "negated-relax"
    NEGATED_STRESS = "negated-stress"


class Scale(enum.Enum):
    STRESS = "stress"
    RELAXATION = "relax"


@dataclass(frozen=True)
class DualScore:
    stress: int  # -5..-1
    relaxation: int  # 1..5

    def __post_init__(self):
        if not -5 <= self.stress <= -1:
            raise ValueError(f"stress out of range: {self.stress}")
        if not 1 <= self.relaxation <= 5:
            raise ValueError(f"relaxation out of range: {self.relaxation}")


@dataclass(frozen=True)
class TermContribution:
    token_index: int
    source: Source
    base_strength: int
    booster_delta: int
    repeat_boost: int
    final_strength: int
    scale: Scale
    label: str  # matched pattern / idiom phrase / glyph


@dataclass(frozen=True)
class SentenceTrace:
    tokens: tuple[Token, ...]
    contributions: tuple[TermContribution, ...]
    exclamation_present: bool
    stress_boosted: bool
    relax_boosted: bool
    score: DualScore


@dataclass(frozen=True)
class ScoreTrace:
    sentences: tuple[SentenceTrace, ...]
    score: DualScore


def _clamp(value: int) -> int:
    return max(1, min(5, value))


def score_sentence(tokens, lex: LexiconSet) -> tuple[DualScore, SentenceTrace]:
    """Score one tokenized sentence; see the module pipeline description."""
    tokens = tuple(tokens)
    n = len(tokens)
    masked = [False] * n
    contributions: list[TermContribution] = []
    boosters = lex.booster_deltas

    # 1. Idioms override their constituent words: longest first, leftmost.
    for idiom in sorted(lex.idioms, key=lambda i: -len(i.tokens)):
        width = len(idiom.tokens)
        i = 0
        while i + width <= n:
            window = tokens[i:i + width]
            if (not any(masked[i:i + width])
                    and all(t.normalized == w and not t.is_punct_run for t, w in zip(window, idiom.tokens))):
                for j in range(i, i + width):
                    masked[j] = True
                if idiom.kind is not Kind.NEUTRAL:
                    scale = Scale.STRESS if idiom.kind is Kind.STRESS else Scale.RELAXATION
                    contributions.append(TermContribution(
                        i, Source.IDIOM, idiom.strength, 0, 0, idiom.strength, scale,
                        " ".join(idiom.tokens)))
                i += width
            else:
                i += 1

    # 2. Emoticons match punctuation runs verbatim and case-sensitively.
    for i, token in enumerate(tokens):
        if masked[i] or not token.is_punct_run:
            continue
        for emo in lex.emoticons:
            if token.raw == emo.glyph:
                if emo.kind is not Kind.NEUTRAL:
                    scale = Scale.STRESS if emo.kind is Kind.STRESS else Scale.RELAXATION
                    contributions.append(TermContribution(
                        i, Source.EMOTICON, emo.strength, 0, 0, emo.strength, scale, emo.glyph))
                masked[i] = True
                break

    # 3-6. Term matches with booster, repeated-letter emphasis and negation.
    for i, token in enumerate(tokens):
        if masked[i] or token.is_punct_run or token.normalized == URL_TOKEN:
            continue
        for kind in (Kind.STRESS, Kind.RELAXATION):
            hit = lookup(token.normalized, lex.terms(kind))
            if hit is None:
                continue
            entry, base = hit

            j = i - 1  # booster immediately before, allowing one negator between
            if j >= 0 and tokens[j].normalized in lex.negators:
                j -= 1
            delta = 0
            if j >= 0 and not masked[j] and tokens[j].normalized in boosters:
                delta = boosters[tokens[j].normalized]

            repeat = 1 if token.letters_removed >= 2 else 0

            j = i - 1  # negator immediately before, allowing one booster between
            if j >= 0 and tokens[j].normalized in boosters:
                j -= 1
            negated = j >= 0 and not masked[j] and tokens[j].normalized in lex.negators

            final = _clamp(base + delta + repeat)
            if kind is Kind.RELAXATION:
                if negated:
                    # A negated relaxing word becomes a stress word of the
                    # same (boosted) strength.
                    contributions.append(TermContribution(
                        i, Source.NEGATED_RELAX, base, delta, repeat, final, Scale.STRESS, entry.pattern))
                else:
                    contributions.append(TermContribution(
                        i, Source.RELAX_TERM, base, delta, repeat, final, Scale.RELAXATION, entry.pattern))
            else:
                if negated:
                    # A negated stress word is neutralised.
                    contributions.append(TermContribution(
                        i, Source.NEGATED_STRESS, base, delta, repeat, 1, Scale.STRESS, entry.pattern))
                else:
                    contributions.append(TermContribution(
                        i, Source.STRESS_TERM, base, delta, repeat, final, Scale.STRESS, entry.pattern))

    # 7-9. Per-scale maxima, exclamation boost, clamp.
    stress_mag = max([c.final_strength for c in contributions if c.scale is Scale.STRESS], default=1)
    relax_mag = max([c.final_strength for c in contributions if c.scale is Scale.RELAXATION], default=1)

    exclaim = any(t.is_punct_run and "!" in t.raw for t in tokens)
    stress_boosted = exclaim and stress_mag >= 2
    relax_boosted = exclaim and relax_mag >= 2
    if stress_boosted:
        stress_mag = _clamp(stress_mag + 1)
    if relax_boosted:
        relax_mag = _clamp(relax_mag + 1)

    score = DualScore(-stress_mag, relax_mag)
    trace = SentenceTrace(tokens, tuple(contributions), exclaim, stress_boosted, relax_boosted, score)
    return score, trace


def score_tokenized(doc: TokenizedText, lex: LexiconSet) -> tuple[DualScore, ScoreTrace]:
    """Score an already-tokenized text (the optimizer's fast path)."""
    traces = []
    for sentence in doc.sentences:
        _, trace = score_sentence(sentence, lex)
        traces.append(trace)
    if traces:
        stress = min(t.score.stress for t in traces)
        relax = max(t.score.relaxation for t in traces)
    else:
        stress, relax = STRESS_BASELINE, RELAX_BASELINE
    score = DualScore(stress, relax)
    return score, ScoreTrace(tuple(traces), score)


def score_text(text: str, lex: LexiconSet, recognised=None) -> tuple[DualScore, ScoreTrace]:
    """Score a raw text; the text takes the extreme sentence value per scale."""
    if recognised is None:
        recognised = lex.recognised_words
    return score_tokenized(process(text, recognised), lex)


def replay_trace(trace: ScoreTrace) -> DualScore:
    """Recompute the score from the trace alone; used to validate traces."""
    if not trace.sentences:
        return DualScore(STRESS_BASELINE, RELAX_BASELINE)
    stress = STRESS_BASELINE
    relax = RELAX_BASELINE
    for sent in trace.sentences:
        s_mag, r_mag = 1, 1
        for c in sent.contributions:
            if c.source is Source.NEGATED_STRESS:
                expected = 1
            elif c.source in (Source.IDIOM, Source.EMOTICON):
                expected = c.base_strength
            else:
                expected = _clamp(c.base_strength + c.booster_delta + c.repeat_boost)
            if expected != c.final_strength:
                raise AssertionError(f"inconsistent contribution arithmetic: {c}")
            if c.scale is Scale.STRESS:
                s_mag = max(s_mag, c.final_strength)
            else:
                r_mag = max(r_mag, c.final_strength)
        if sent.stress_boosted:
            if not (sent.exclamation_present and s_mag >= 2):
                raise AssertionError("stress boost flag inconsistent with trace")
            s_mag = _clamp(s_mag + 1)
        if sent.relax_boosted:
            if not (sent.exclamation_present and r_mag >= 2):
                raise AssertionError("relaxation boost flag inconsistent with trace")
            r_mag = _clamp(r_mag + 1)
        if DualScore(-s_mag, r_mag) != sent.score:
            raise AssertionError("sentence trace does not replay to its score")
        stress = min(stress, -s_mag)
        relax = max(relax, r_mag)
    if DualScore(stress, relax) != trace.score:
        raise AssertionError("text trace does not replay to its score")
    return trace.score


def explain(text: str, lex: LexiconSet) -> str:
    """Human-readable rendering of the score trace for one text."""
    score, trace = score_text(text, lex)
    lines = [f"text score: stress {score.stress}, relaxation {score.relaxation}"]
    for s_idx, sent in enumerate(trace.sentences, start=1):
        words = " ".join(t.raw for t in sent.tokens)
        lines.append(f"  sentence {s_idx}: {words!r} -> stress {sent.score.stress}, "
                     f"relaxation {sent.score.relaxation}")
        if not sent.contributions:
            lines.append("    no matches; baseline scores")
        for c in sent.contributions:
            parts = [f"{c.source.value} {c.label!r} at token {c.token_index}: base {c.base_strength}"]
            if c.booster_delta:
                parts.append(f"booster {c.booster_delta:+d}")
            if c.repeat_boost:
                parts.append("repeated letters +1")
            parts.append(f"-> {c.final_strength} on {c.scale.value}")
            lines.append("    " + ", ".join(parts))
        if sent.stress_boosted:
            lines.append("    exclamation boost +1 on stress")
        if sent.relax_boosted:
            lines.append("    exclamation boost +1 on relaxation")
    return "\n".join(lines)
