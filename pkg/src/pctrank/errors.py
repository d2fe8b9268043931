"""Exception types shared across the package."""

from __future__ import annotations

from fractions import Fraction


class PctrankError(Exception):
    """Base class for every error this package raises deliberately."""


class ConfigError(PctrankError, ValueError):
    """A run configuration value is invalid (selector, precision, flags)."""


class SchemeError(ConfigError):
    """A class scheme is malformed or a scheme selector cannot be resolved."""


class DataError(PctrankError, ValueError):
    """Input data is malformed: bad row, bad citation count, duplicate id."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class BoundaryAmbiguityError(PctrankError):
    """A point quantile landed exactly on an interior class boundary while the
    boundary policy was set to refuse such cases."""

    def __init__(self, boundary: Fraction):
        super().__init__(
            f"quantile {boundary} falls exactly on an interior class boundary; "
            "use boundary policy 'lower' or 'upper' to resolve it"
        )
        self.boundary = boundary
