"""Exception types raised by the engine."""

from __future__ import annotations


class FAHPError(Exception):
    """Base class for every error raised by :mod:`fahp`."""


class DomainError(FAHPError, ValueError):
    """A numeric argument lies outside the domain of an operation."""


class DimensionError(FAHPError, ValueError):
    """Matrix or vector sizes do not fit together."""


class MissingPairError(FAHPError, ValueError):
    """A pairwise comparison needed to complete a matrix is absent."""

    def __init__(self, pair: tuple[int, int], message: str | None = None):
        self.pair = pair
        super().__init__(message or f"no comparison supplied for pair {pair}")


class ReciprocityError(FAHPError, ValueError):
    """A comparison matrix is not reciprocal."""


class StudyParseError(FAHPError):
    """The study document could not be parsed at all."""


class StudySchemaError(FAHPError):
    """The study document parsed but violates the study schema.

    ``path`` locates the offending element, e.g. ``matrices.P1.cells[3].tfn``.
    """

    def __init__(self, path: str, message: str):
        self.path = path
        self.message = message
        super().__init__(f"{path}: {message}" if path else message)


class ConsistencyFailure(FAHPError):
    """Raised in strict mode when a comparison matrix has CR >= 0.10."""

    def __init__(self, offending: dict[str, float]):
        self.offending = dict(offending)
        listed = ", ".join(f"{k} (CR={v:.6f})" for k, v in self.offending.items())
        super().__init__(f"inconsistent comparison matrices: {listed}")
