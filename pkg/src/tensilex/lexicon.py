"""Lexical resources: term lists, boosters, negators, idioms, emoticons, dictionary.

A lexicon lives on disk as a directory of seven UTF-8 files:

    stress_terms.tsv   pattern<TAB>strength
    relax_terms.tsv    pattern<TAB>strength
    boosters.tsv       word<TAB>delta
    negators.txt       one word per line
    idioms.tsv         space-joined phrase<TAB>kind<TAB>strength
    emoticons.tsv      glyph<TAB>kind<TAB>strength
    dictionary.txt     one word per line

Lines starting with ``#`` are comments. A term pattern may end in a single
``*`` wildcard meaning "any suffix". Strengths are integers 1..5.

Loaded sets are immutable; :func:`set_strength` returns a new set so the
optimizer can reject a change by simply discarding the new value.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, replace

from .errors import (
    DuplicateTerm,
    MissingResource,
    ParseError,
    StrengthRangeError,
    UnknownTerm,
    WriteError,
)


class Kind(enum.Enum):
    STRESS = "stress"
    RELAXATION = "relax"
    NEUTRAL = "neutral"


@dataclass(frozen=True)
class LexiconEntry:
    pattern: str  # lowercase, optional single trailing '*'
    kind: Kind
    strength: int  # magnitude 1..5; sign applied at scoring time

    def __post_init__(self):
        _check_strength(self.strength)
        if not self.pattern or " " in self.pattern or "\t" in self.pattern:
            raise ParseError(f"bad pattern {self.pattern!r}")
        if "*" in self.pattern[:-1] or self.pattern == "*":
            raise ParseError(f"wildcard must be a single trailing '*': {self.pattern!r}")

    @property
    def is_wildcard(self) -> bool:
        return self.pattern.endswith("*")

    @property
    def stem(self) -> str:
        return self.pattern[:-1] if self.is_wildcard else self.pattern


@dataclass(frozen=True)
class BoosterEntry:
    word: str
    delta: int  # in {-2,-1,+1,+2}

    def __post_init__(self):
        if self.delta == 0 or abs(self.delta) > 2:
            raise ParseError(f"booster delta must be in -2..2 and nonzero: {self.delta}")


@dataclass(frozen=True)
class IdiomEntry:
    tokens: tuple[str, ...]  # >= 2 lowercase tokens
    kind: Kind
    strength: int

    def __post_init__(self):
        _check_strength(self.strength)
        if len(self.tokens) < 2:
            raise ParseError(f"idiom needs >= 2 tokens: {self.tokens!r}")


@dataclass(frozen=True)
class EmoticonEntry:
    glyph: str  # matched case-sensitively, verbatim
    kind: Kind
    strength: int

    def __post_init__(self):
        _check_strength(self.strength)
        if not self.glyph:
            raise ParseError("empty emoticon glyph")


@dataclass(frozen=True)
class LexiconSet:
    stress_terms: tuple[LexiconEntry, ...]
    relax_terms: tuple[LexiconEntry, ...]
    boosters: tuple[BoosterEntry, ...]
    negators: frozenset[str]
    idioms: tuple[IdiomEntry, ...]
    emoticons: tuple[EmoticonEntry, ...]
    dictionary: frozenset[str]

    def __post_init__(self):
        for entries, name in ((self.stress_terms, "stress"), (self.relax_terms, "relax")):
            seen = set()
            for e in entries:
                if e.pattern in seen:
                    raise DuplicateTerm(f"duplicate {name} pattern {e.pattern!r}")
                seen.add(e.pattern)
        # Canonical ordering so equality and the save/load round trip are
        # insensitive to insertion order.
        object.__setattr__(self, "stress_terms", tuple(sorted(self.stress_terms, key=lambda e: e.pattern)))
        object.__setattr__(self, "relax_terms", tuple(sorted(self.relax_terms, key=lambda e: e.pattern)))
        object.__setattr__(self, "boosters", tuple(sorted(self.boosters, key=lambda b: b.word)))
        object.__setattr__(self, "idioms", tuple(sorted(self.idioms, key=lambda i: i.tokens)))
        object.__setattr__(self, "emoticons", tuple(sorted(self.emoticons, key=lambda e: e.glyph)))

    @property
    def booster_deltas(self) -> dict[str, int]:
        return {b.word: b.delta for b in self.boosters}

    @property
    def recognised_words(self) -> frozenset[str]:
        """Dictionary plus every non-wildcard term pattern."""
        words = set(self.dictionary)
        for e in self.stress_terms:
            if not e.is_wildcard:
                words.add(e.pattern)
        for e in self.relax_terms:
            if not e.is_wildcard:
                words.add(e.pattern)
        return frozenset(words)

    def terms(self, kind: Kind) -> tuple[LexiconEntry, ...]:
        if kind is Kind.STRESS:
            return self.stress_terms
        if kind is Kind.RELAXATION:
            return self.relax_terms
        raise ValueError(f"no term list for kind {kind}")


EMPTY_LEXICON = LexiconSet((), (), (), frozenset(), (), (), frozenset())

_FILES = (
    "stress_terms.tsv",
    "relax_terms.tsv",
    "boosters.tsv",
    "negators.txt",
    "idioms.tsv",
    "emoticons.tsv",
    "dictionary.txt",
)

_KIND_NAMES = {"stress": Kind.STRESS, "relax": Kind.RELAXATION, "neutral": Kind.NEUTRAL}


def _check_strength(strength):
    if not isinstance(strength, int) or not 1 <= strength <= 5:
        raise StrengthRangeError(f"strength must be an integer in 1..5, got {strength!r}")


def _data_lines(path):
    """Yield (line_number, stripped_text) skipping blanks and # comments."""
    with open(path, encoding="utf-8") as fh:
        for i, line in enumerate(fh, start=1):
            text = line.rstrip("\n")
            if not text.strip() or text.lstrip().startswith("#"):
                continue
            yield i, text


def _parse_int(text, lineno, what):
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} is not an integer: {text!r}", line=lineno) from None


def _parse_strength(text, lineno):
    value = _parse_int(text, lineno, "strength")
    if not 1 <= value <= 5:
        raise ParseError(f"strength out of range 1..5: {value}", line=lineno)
    return value


def _parse_kind(text, lineno):
    kind = _KIND_NAMES.get(text.strip().lower())
    if kind is None:
        raise ParseError(f"unknown kind {text!r}", line=lineno)
    return kind


def _load_terms(path, kind):
    entries = []
    seen = {}
    for lineno, text in _data_lines(path):
        cols = text.split("\t")
        if len(cols) != 2:
            raise ParseError(f"expected 2 columns, got {len(cols)}", line=lineno)
        pattern = cols[0].strip().lower()
        if pattern in seen:
            raise DuplicateTerm(f"duplicate pattern {pattern!r} (first at line {seen[pattern]})", line=lineno)
        seen[pattern] = lineno
        strength = _parse_strength(cols[1], lineno)
        try:
            entries.append(LexiconEntry(pattern, kind, strength))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None
    return tuple(entries)


def load_lexicon_set(directory_path) -> LexiconSet:
    """Load and validate the seven-file lexicon directory."""
    paths = {}
    for name in _FILES:
        path = os.path.join(directory_path, name)
        if not os.path.isfile(path):
            raise MissingResource(f"missing lexicon file: {path}")
        paths[name] = path

    stress = _load_terms(paths["stress_terms.tsv"], Kind.STRESS)
    relax = _load_terms(paths["relax_terms.tsv"], Kind.RELAXATION)

    boosters = []
    for lineno, text in _data_lines(paths["boosters.tsv"]):
        cols = text.split("\t")
        if len(cols) != 2:
            raise ParseError(f"expected 2 columns, got {len(cols)}", line=lineno)
        delta = _parse_int(cols[1], lineno, "booster delta")
        try:
            boosters.append(BoosterEntry(cols[0].strip().lower(), delta))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None

    negators = frozenset(text.strip().lower() for _, text in _data_lines(paths["negators.txt"]))

    idioms = []
    for lineno, text in _data_lines(paths["idioms.tsv"]):
        cols = text.split("\t")
        if len(cols) != 3:
            raise ParseError(f"expected 3 columns, got {len(cols)}", line=lineno)
        tokens = tuple(cols[0].strip().lower().split())
        kind = _parse_kind(cols[1], lineno)
        strength = _parse_strength(cols[2], lineno)
        try:
            idioms.append(IdiomEntry(tokens, kind, strength))
        except ParseError as exc:
            raise ParseError(str(exc), line=lineno) from None

    emoticons = []
    for lineno, text in _data_lines(paths["emoticons.tsv"]):
        cols = text.split("\t")
        if len(cols) != 3:
            raise ParseError(f"expected 3 columns, got {len(cols)}", line=lineno)
        kind = _parse_kind(cols[1], lineno)
        strength = _parse_strength(cols[2], lineno)
        emoticons.append(EmoticonEntry(cols[0], kind, strength))

    dictionary = frozenset(text.strip().lower() for _, text in _data_lines(paths["dictionary.txt"]))

    return LexiconSet(stress, relax, tuple(boosters), negators, tuple(idioms), tuple(emoticons), dictionary)


def lookup(token: str, entries) -> tuple[LexiconEntry, int] | None:
    """Match a normalized token against a term list.

    An exact pattern beats any wildcard; among wildcard matches the
    longest stem wins. Returns None when nothing matches.
    """
    best = None
    for entry in entries:
        if entry.is_wildcard:
            if token.startswith(entry.stem):
                if best is None or (best.is_wildcard and len(entry.stem) > len(best.stem)):
                    best = entry
        elif token == entry.pattern:
            return entry, entry.strength
    if best is None:
        return None
    return best, best.strength


def set_strength(lex: LexiconSet, kind: Kind, pattern: str, strength: int) -> LexiconSet:
    """Return a copy of the lexicon with one term's strength changed."""
    _check_strength(strength)
    entries = lex.terms(kind)
    index = next((i for i, e in enumerate(entries) if e.pattern == pattern), None)
    if index is None:
        raise UnknownTerm(f"no {kind.value} term with pattern {pattern!r}")
    updated = entries[:index] + (replace(entries[index], strength=strength),) + entries[index + 1:]
    if kind is Kind.STRESS:
        return replace(lex, stress_terms=updated)
    return replace(lex, relax_terms=updated)


def save_lexicon_set(lex: LexiconSet, directory_path) -> None:
    """Write the seven-file directory; entries sorted for deterministic diffs."""
    try:
        os.makedirs(directory_path, exist_ok=True)
        _write(directory_path, "stress_terms.tsv",
               [f"{e.pattern}\t{e.strength}" for e in sorted(lex.stress_terms, key=lambda e: e.pattern)])
        _write(directory_path, "relax_terms.tsv",
               [f"{e.pattern}\t{e.strength}" for e in sorted(lex.relax_terms, key=lambda e: e.pattern)])
        _write(directory_path, "boosters.tsv",
               [f"{b.word}\t{b.delta}" for b in sorted(lex.boosters, key=lambda b: b.word)])
        _write(directory_path, "negators.txt", sorted(lex.negators))
        _write(directory_path, "idioms.tsv",
               [f"{' '.join(i.tokens)}\t{i.kind.value}\t{i.strength}"
                for i in sorted(lex.idioms, key=lambda i: i.tokens)])
        _write(directory_path, "emoticons.tsv",
               [f"{e.glyph}\t{e.kind.value}\t{e.strength}"
                for e in sorted(lex.emoticons, key=lambda e: e.glyph)])
        _write(directory_path, "dictionary.txt", sorted(lex.dictionary))
    except OSError as exc:
        raise WriteError(f"failed to write lexicon to {directory_path}: {exc}") from exc


def _write(directory, name, lines):
    with open(os.path.join(directory, name), "w", encoding="utf-8") as fh:
        for line in lines:
            fh.write(line + "\n")
