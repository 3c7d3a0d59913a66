"""Exceptions raised for invalid toric input and failed computations."""


class ToricError(ValueError):
    """Base class for domain errors (CLI exit code 1)."""


class FanValidationError(ToricError):
    """A stacky fan violates one of its invariants."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid stacky fan: " + "; ".join(self.violations))


class DimensionMismatchError(ToricError):
    pass


class UnsupportedFanError(ToricError):
    """The operation is only implemented for a narrower class of fans."""


class CertificationError(ToricError):
    """An enumeration bound could not be certified."""


class MorphismError(ToricError):
    pass


class PoolTooLargeError(ToricError):
    pass


class FanFileError(ToricError):
    pass


class GridTooLargeError(ToricError):
    """A lattice enumeration would exceed Config.MAX_GRID_POINTS."""


class IntegerRangeError(ToricError):
    """Entries too large for a vectorized int64 enumeration."""
