"""Triangular fuzzy numbers.

A :class:`TFN` is an immutable triple ``(l, m, u)`` with ``l <= m <= u``:
the lowest possible, most promising and highest possible value of a
judgment. The arithmetic here is the componentwise algebra used by
extent analysis; it is not a general fuzzy-set library.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError

__all__ = [
    "TFN",
    "ONE",
    "ZERO",
    "tfn_add",
    "tfn_sum",
    "tfn_multiply",
    "tfn_inverse",
    "tfn_scale",
    "membership",
    "possibility_degree",
    "graded_mean_defuzzify",
]


@dataclass(frozen=True, slots=True)
class TFN:
    l: float
    m: float
    u: float

    def __post_init__(self) -> None:
        for name in ("l", "m", "u"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or isinstance(v, bool):
                raise TypeError(f"TFN.{name} must be a real number, got {v!r}")
            if not math.isfinite(v):
                raise DomainError(f"TFN.{name} must be finite, got {v!r}")
            object.__setattr__(self, name, float(v))
        if not self.l <= self.m <= self.u:
            raise DomainError(
                f"TFN values must satisfy l <= m <= u, got ({self.l}, {self.m}, {self.u})"
            )

    @classmethod
    def crisp(cls, x: float) -> TFN:
        """Degenerate TFN ``(x, x, x)``."""
        return cls(x, x, x)

    @classmethod
    def from_seq(cls, values: Iterable[float]) -> TFN:
        l, m, u = values
        return cls(l, m, u)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.l, self.m, self.u)

    def __iter__(self):
        yield self.l
        yield self.m
        yield self.u

    @property
    def is_positive(self) -> bool:
        return self.l > 0

    def isclose(self, other: TFN, *, abs_tol: float = 1e-9) -> bool:
        return all(math.isclose(a, b, rel_tol=0.0, abs_tol=abs_tol) for a, b in zip(self, other))

    def __add__(self, other: TFN) -> TFN:
        if not isinstance(other, TFN):
            return NotImplemented
        return tfn_add(self, other)

    def __mul__(self, other: TFN | float) -> TFN:
        if isinstance(other, TFN):
            return tfn_multiply(self, other)
        if isinstance(other, (int, float)) and not isinstance(other, bool):
            return tfn_scale(other, self)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> TFN:
        return tfn_inverse(self)

    def defuzzify(self) -> float:
        return graded_mean_defuzzify(self)

    def __repr__(self) -> str:
        return f"TFN({self.l:g}, {self.m:g}, {self.u:g})"


ONE = TFN(1.0, 1.0, 1.0)
ZERO = TFN(0.0, 0.0, 0.0)


def tfn_add(a: TFN, b: TFN) -> TFN:
    return TFN(a.l + b.l, a.m + b.m, a.u + b.u)


def tfn_sum(values: Iterable[TFN]) -> TFN:
    """Componentwise sum of any number of TFNs (``ZERO`` for none)."""
    values = list(values)
    return TFN(
        math.fsum(v.l for v in values),
        math.fsum(v.m for v in values),
        math.fsum(v.u for v in values),
    )


def tfn_multiply(a: TFN, b: TFN) -> TFN:
    if not (a.is_positive and b.is_positive):
        raise DomainError(f"multiplication needs positive TFNs, got {a!r} and {b!r}")
    return TFN(a.l * b.l, a.m * b.m, a.u * b.u)


def tfn_inverse(a: TFN) -> TFN:
    """Reciprocal ``(1/u, 1/m, 1/l)``; the bounds swap so the order holds."""
    if not a.is_positive:
        raise DomainError(f"inverse needs a positive TFN, got {a!r}")
    return TFN(1.0 / a.u, 1.0 / a.m, 1.0 / a.l)


def tfn_scale(k: float, a: TFN) -> TFN:
    if not k > 0:
        raise DomainError(f"scale factor must be positive, got {k!r}")
    return TFN(k * a.l, k * a.m, k * a.u)


def membership(f: TFN, x: float) -> float:
    """Membership grade of ``x`` in ``f``: rises on [l, m], falls on [m, u].

    A degenerate side (``l == m`` or ``m == u``) contributes no slope, so a
    crisp TFN is the indicator of its single point.
    """
    if x == f.m:
        return 1.0
    if f.l <= x < f.m:
        return (x - f.l) / (f.m - f.l)
    if f.m < x <= f.u:
        return (f.u - x) / (f.u - f.m)
    return 0.0


def possibility_degree(a: TFN, b: TFN) -> float:
    """Degree of possibility that ``a >= b``.

    1 when a's peak is not left of b's; otherwise the ordinate of the
    intersection between a's falling edge and b's rising edge, or 0 when
    the supports do not overlap (tangency counts as no overlap).
    """
    if a.m >= b.m:
        return 1.0
    if a.u > b.l:
        # a.m < b.m here, so the denominator is > 0
        return (a.u - b.l) / ((a.u - a.m) + (b.m - b.l))
    return 0.0


def graded_mean_defuzzify(a: TFN) -> float:
    """Graded mean integration representation ``(l + 4m + u) / 6``."""
    return (a.l + 4.0 * a.m + a.u) / 6.0
