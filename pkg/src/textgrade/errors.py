"""Exception types shared across the package."""


class TextGradeError(Exception):
    """Base class for all errors raised by textgrade."""


class ManifestError(TextGradeError):
    """Corpus manifest cannot be parsed."""


class GradeRangeError(ManifestError):
    """Manifest names a grade outside 1-4."""


class IncompleteCorpusError(ManifestError):
    """At least one grade in 1-4 has no manifest entry."""


class EmptyClassError(TextGradeError):
    """A grade's files tokenize to an empty sequence."""


class EmptyQueryError(TextGradeError):
    """Input text contains no tokens after tokenization."""


class VocabularyMismatchError(TextGradeError):
    """Two vectors were built over different vocabularies."""


class ZeroVectorError(TextGradeError):
    """Cosine similarity is undefined for an all-zero vector."""
