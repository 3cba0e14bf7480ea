"""Exception types shared across the package."""


class SpectileError(Exception):
    """Base class for all errors raised by this package."""


class EmptySetError(SpectileError, ValueError):
    """An operation that needs a nonempty set received an empty one."""


class InvalidIndexError(SpectileError, ValueError):
    """A root-of-unity order or similar index is out of range."""


class ZeroDivisorError(SpectileError, ZeroDivisionError):
    """Polynomial division by the zero polynomial."""


class ModulusMismatchError(SpectileError, ValueError):
    """Two Z_n objects with different n were combined."""


class CardinalityMismatchError(SpectileError, ValueError):
    """A candidate spectrum or tile family has the wrong cardinality."""


class NonBinaryCoefficientsError(SpectileError, ValueError):
    """A construction that must yield a 0/1 mask polynomial produced other
    coefficients.  The offending polynomial is attached."""

    def __init__(self, message, coeffs=None):
        super().__init__(message)
        self.coeffs = coeffs


class EmptySpectrumError(SpectileError, ValueError):
    """A spectrum argument was empty."""


class NotPTileError(SpectileError, ValueError):
    """A step set is not a p-tile; carries a witness cell and its fiber."""

    def __init__(self, message, cell=None, fiber=None):
        super().__init__(message)
        self.cell = cell
        self.fiber = fiber


class CeilingExceededError(SpectileError, ValueError):
    """A survey size exceeds the configured ceiling."""


class BadPartitionError(SpectileError, ValueError):
    """A list of cut points does not partition the required interval."""
