"""Exception hierarchy. Everything raised on purpose derives from CrecError."""


class CrecError(Exception):
    """Base class for all domain errors."""


class PolynomialError(CrecError):
    """Operation undefined for the given polynomial (zero input, bad degree...)."""


class RecurrenceError(CrecError):
    """Malformed recurrence data."""


class NaturalityError(CrecError):
    """Sequence is (or may be) not natural-valued where naturality is required."""


class DerivationError(CrecError):
    """A representation cannot be derived from the given input."""


class BaseSearchError(CrecError):
    """Certified base search exceeded its ceiling."""


class EvaluationError(CrecError):
    """Representation cannot be evaluated at this index (e.g. modulus <= 0)."""


class InvalidRepresentationError(CrecError):
    """Evaluation exposed an inconsistency: the base/representation is not valid.

    Raised on inexact division by the free-term scale factor, on a vanishing
    inner remainder, or on a negative recovered value.
    """


class BFileError(CrecError):
    """Malformed OEIS b-file input."""


class DivisibilityWarning(UserWarning):
    """The reversed denominator divided the numerator at some index.

    The published machinery asserts this never happens; it is reported rather
    than assumed. The computed value is still the faithful value of the
    formula (oracle verification decides whether it is the sequence value).
    """
