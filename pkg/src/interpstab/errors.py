"""Exception types shared across the library and the CLI."""


class InterpstabError(Exception):
    """Base class for all library errors."""


class InvalidScalar(InterpstabError):
    """A scalar input is NaN or infinite."""


class DistinctnessViolation(InterpstabError):
    """Two knots compare exactly equal."""


class ShapeError(InterpstabError):
    """Sequence lengths are inconsistent with the requested operation."""


class OrderingDomainError(InterpstabError):
    """An ordering strategy was applied to data it is not defined for."""


class DegenerateConditioning(InterpstabError):
    """A conditioning or error-metric denominator is exactly zero."""


class ConfigError(InterpstabError):
    """An experiment configuration is invalid.

    ``field`` names the offending option so CLI messages can point at it.
    """

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"{field}: {message}")


class InputFormatError(InterpstabError):
    """A knot/value file cannot be parsed; the message carries the line number."""
