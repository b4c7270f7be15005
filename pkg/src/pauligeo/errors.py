"""Exception types raised by pauligeo."""


class PauliGeoError(Exception):
    """Base class for all pauligeo errors."""


class NonUnitModulus(PauliGeoError, ValueError):
    pass


class InvalidSpec(PauliGeoError, ValueError):
    pass


class DimensionMismatch(PauliGeoError, ValueError):
    pass


class BadDimension(PauliGeoError, ValueError):
    pass


class DomainError(PauliGeoError, ValueError):
    pass


class WeightTooLow(PauliGeoError, ValueError):
    pass


class EpsilonTooLarge(PauliGeoError, ValueError):
    pass


class TooLarge(PauliGeoError):
    """The instance exceeds what a solver is allowed (or able) to search."""


class ParseError(PauliGeoError, ValueError):
    """An input document is malformed."""


class InvariantViolation(PauliGeoError, ValueError):
    """An input document parses but breaks a stated invariant."""
