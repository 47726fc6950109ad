"""Exception hierarchy shared across the package."""


class TensilexError(Exception):
    """Base class for all package errors."""


class MissingResource(TensilexError):
    """A required lexicon file or input file does not exist."""


class ParseError(TensilexError):
    """A data file line could not be parsed.

    Carries the 1-based line (or row) number when known.
    """

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DuplicateTerm(ParseError):
    """The same pattern appears twice within one term list."""


class UnknownTerm(TensilexError):
    """A pattern was referenced that is not present in the lexicon."""


class StrengthRangeError(TensilexError):
    """A strength value lies outside the 1..5 magnitude range."""


class WriteError(TensilexError):
    """Persisting a lexicon or report failed."""


class EmptyCorpus(TensilexError):
    """An operation requiring annotated examples received none."""


class EmptySeries(TensilexError):
    """A metric was asked for on a zero-length paired series."""


class InsufficientData(TensilexError):
    """Agreement cannot be computed: no item has two codeable values."""


class LengthError(TensilexError):
    """Two paired sequences differ in length."""


class TooSmall(TensilexError):
    """The corpus has fewer examples than requested folds."""


class DegenerateLabels(TensilexError):
    """Feature selection needs at least two distinct labels."""
