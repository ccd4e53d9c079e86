"""Exception types shared across the package."""


class StickyError(Exception):
    """Base class for all package errors."""


class EmptyCorpus(StickyError):
    """A corpus file or title list contained no usable entries."""


class ResourceMissing(StickyError):
    """A required resource (model, lexicon, thesaurus, stopwords) is absent."""


class PositionOutOfRange(StickyError):
    """A substitution addressed a token position the title does not have."""


class IdentityReplacement(StickyError):
    """A substitution proposed replacing a word with itself."""


class AlreadyReviewed(StickyError):
    """A decision was recorded for a candidate that is no longer pending."""


class UnknownCandidate(StickyError):
    """A decision referenced a candidate id not present in the session."""


class UnknownSession(StickyError):
    """A request referenced a session id the service does not know."""


class TooFewObservations(StickyError):
    """A statistical operation needs at least two observations per group."""


class ZeroVariance(StickyError):
    """Raised only where a zero-variance input has no defined fallback."""


class OutOfScale(StickyError):
    """A questionnaire item was outside the 1..5 response scale."""


class MissingVariant(StickyError):
    """An experiment analysis needs both original and treatment responses."""


class MalformedRecord(StickyError):
    """A delimited input row could not be parsed.

    Carries the 1-based line number so command-line tools can report it.
    """

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no
