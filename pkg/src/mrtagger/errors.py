"""Shared exception types.

Every domain error raised by this package derives from :class:`Error` so
callers (and the CLI) can distinguish expected failures from bugs.
"""


class Error(Exception):
    """Base class for all domain errors raised by mrtagger."""


# --- corpus / column format ---

class MalformedLine(Error):
    """A line in a column-format file does not have exactly two columns."""

    def __init__(self, line_no, line):
        super().__init__(f"line {line_no}: expected 'token<TAB>tag', got {line!r}")
        self.line_no = line_no
        self.line = line


class UnknownTag(Error):
    """A tag string is not in the 19-label inventory."""


class EmptyCorpus(Error):
    """Parsed input contains no sentences."""


# --- annotation pipeline ---

class EmptySentence(Error):
    """A sentence to pre-tag contains no tokens."""


class TaggerFailure(Error):
    """The POS pre-tagger returned unusable output."""


class BatchTooLarge(Error):
    """A prompt batch is empty or exceeds the configured maximum."""


class UnparseableResponse(Error):
    """No structured judgment block could be located in an annotator reply."""

    def __init__(self, message, raw):
        super().__init__(message)
        self.raw = raw


class SchemaViolation(Error):
    """A structured judgment record is missing fields or fails validation."""

    def __init__(self, message, raw):
        super().__init__(message)
        self.raw = raw


class IndexMismatch(Error):
    """A judgment addresses a token that is not a verb or whose surface differs."""


class AnnotatorUnavailable(Error):
    """The external annotator kept failing after the configured retries."""


# --- diagnostics ---

class NotAVerb(Error):
    """diagnose() was called on a token that is not pre-tagged VERB."""


# --- tagger ---

class SpanOutOfRange(Error):
    """An alignment span addresses subword positions outside the sequence."""


class InvalidEpsilon(Error):
    """Label smoothing epsilon outside [0, 1)."""


class DisjointnessViolation(Error):
    """Train and dev corpora share sentence ids."""


class EmptyTrain(Error):
    """Training corpus has no sentences."""


class BadConfig(Error):
    """A TrainingConfig violates one of its invariants."""


# --- evaluation datasets ---

class CompositionMismatch(Error):
    """A gold file's label counts differ from the expected composition."""


class MalformedItem(Error):
    """A gold file row is structurally invalid."""


class EmptyInput(Error):
    """An aggregate operation received no inputs."""


# --- transcripts ---

class UnknownSpeakerLine(Error):
    """An utterance line uses a speaker code not declared by the transcript."""


class EmptyTranscript(Error):
    """A transcript contains no utterance lines."""
