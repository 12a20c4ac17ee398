"""Exception types shared across the package."""


class DquintError(Exception):
    """Base class for all domain errors raised by this package."""


class InvalidModulus(DquintError):
    """Modulus is not an odd prime."""


class InvalidArgument(DquintError):
    """Argument outside the defined domain of an operation."""


class InvalidTwist(DquintError):
    """Twist parameter d is zero, not squarefree, or otherwise unusable."""


class InvalidModel(DquintError):
    """Unknown quartic model name, or model unsupported by the operation."""


class SpecialPrime(DquintError):
    """The primes 2, 3, 13 are outside the classifier's domain."""


class SingularQuartic(DquintError):
    """Twisted quartic has vanishing discriminant."""


class RamifiedPrime(DquintError):
    """Prime divides a field generator or a surd norm; splitting test undefined."""


class NotApplicable(DquintError):
    """Pairing-bit row preconditions fail at this prime."""


class DegenerateScaling(DquintError):
    """Point has x = 0 or y = 0, so the quintuple scaling factor vanishes."""


class DegenerateTuple(DquintError):
    """Constructed tuple has zero or colliding elements."""


class UsageError(DquintError):
    """Bad command-line usage."""
