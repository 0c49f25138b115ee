"""Exception hierarchy for SerreLab.

Every domain error derives from ``SerreLabError``, itself a ``ValueError`` so
that pydantic validators may raise it directly.
"""


class SerreLabError(ValueError):
    """Base class for all SerreLab domain errors."""


class DegenerateBracket(SerreLabError):
    """Raised when {m} is requested for m divisible by p-1 in strict mode."""


class ScalarNiveau2(SerreLabError):
    """Raised when a niveau 2 exponent is divisible by p+1."""


class UnsupportedPrime(SerreLabError):
    """Raised when a prime is outside the range an engine supports."""


class NotInWeightSet(SerreLabError):
    """Raised when certification is requested for a weight outside W."""


class EmptyPlaceList(SerreLabError):
    """Raised when a global computation receives no places."""


class DegreeMismatch(SerreLabError):
    """Raised when degrees that must agree do not."""


class PreconditionError(SerreLabError):
    """Raised when an operation's documented precondition does not hold."""


class CertificationFailed(SerreLabError):
    """Raised when a certificate type does not isolate the target weight."""
