"""Extent analysis: crisp weights from a fuzzy comparison matrix.

Each row is summed into a fuzzy synthetic extent normalized by the
(inverted) grand total. Every extent is then compared against all
others by degree of possibility; its weight is the smallest such degree,
and the weights are normalized to sum to one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DimensionError
from .fuzzy import TFN, possibility_degree, tfn_inverse, tfn_multiply, tfn_sum
from .judgments import FuzzyComparisonMatrix

__all__ = [
    "ExtentVector",
    "WeightVector",
    "synthetic_extents",
    "possibility_matrix",
    "min_possibility",
    "extent_weights",
]


@dataclass(frozen=True)
class ExtentVector:
    extents: tuple[TFN, ...]
    row_sums: tuple[TFN, ...]
    total: TFN

    def __len__(self) -> int:
        return len(self.extents)

    def __getitem__(self, i: int) -> TFN:
        return self.extents[i]


@dataclass(frozen=True)
class WeightVector:
    raw: tuple[float, ...]
    normalized: tuple[float, ...]

    def to_dict(self) -> dict:
        return {"raw": list(self.raw), "normalized": list(self.normalized)}


def synthetic_extents(f: FuzzyComparisonMatrix) -> ExtentVector:
    row_sums = tuple(tfn_sum(row) for row in f.rows())
    total = tfn_sum(row_sums)
    inv = tfn_inverse(total)
    return ExtentVector(tuple(tfn_multiply(s, inv) for s in row_sums), row_sums, total)


def possibility_matrix(e: ExtentVector) -> list[list[float]]:
    """``V(S_i >= S_k)`` for every ordered pair; the diagonal is 1."""
    n = len(e)
    return [[1.0 if i == k else possibility_degree(e[i], e[k]) for k in range(n)] for i in range(n)]


def min_possibility(i: int, e: ExtentVector) -> float:
    n = len(e)
    if n < 2:
        raise DimensionError("need at least two extents to compare")
    if not 0 <= i < n:
        raise IndexError(f"extent index {i} out of range for {n} extents")
    return min(possibility_degree(e[i], e[k]) for k in range(n) if k != i)


def extent_weights(f: FuzzyComparisonMatrix) -> WeightVector:
    e = synthetic_extents(f)
    raw = tuple(min_possibility(i, e) for i in range(len(e)))
    # the extent with the largest middle value scores 1, so total >= 1
    total = math.fsum(raw)
    return WeightVector(raw, tuple(d / total for d in raw))
