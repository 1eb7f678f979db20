"""Linguistic judgments, expert aggregation and fuzzy comparison matrices."""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import DimensionError, DomainError, MissingPairError, ReciprocityError
from .fuzzy import ONE, TFN, tfn_inverse

__all__ = [
    "Importance",
    "Direction",
    "LinguisticLabel",
    "LinguisticScale",
    "DEFAULT_SCALE",
    "ExpertJudgment",
    "FuzzyComparisonMatrix",
    "linguistic_to_tfn",
    "aggregate_judgments",
    "build_matrix",
    "matrix_from_judgments",
]

RECIPROCITY_TOL = 1e-9


class Importance(str, Enum):
    JE = "JE"  # just equal
    EI = "EI"  # equally important
    WI = "WI"  # weakly important
    SMI = "SMI"  # strongly more important
    VSMI = "VSMI"  # very strongly more important
    AMI = "AMI"  # absolutely more important


class Direction(str, Enum):
    FORWARD = "forward"
    RECIPROCAL = "reciprocal"


@dataclass(frozen=True)
class LinguisticLabel:
    """A scale level read either as stated (row over column) or reversed."""

    label: Importance
    direction: Direction = Direction.FORWARD

    def __post_init__(self) -> None:
        object.__setattr__(self, "label", Importance(self.label))
        object.__setattr__(self, "direction", Direction(self.direction))
        if self.label is Importance.JE and self.direction is Direction.RECIPROCAL:
            raise DomainError("JE has no reciprocal direction; use forward")

    def flipped(self) -> LinguisticLabel:
        """The same judgment seen from the transposed cell."""
        if self.label is Importance.JE:
            return self
        other = Direction.RECIPROCAL if self.direction is Direction.FORWARD else Direction.FORWARD
        return LinguisticLabel(self.label, other)

    @classmethod
    def parse(cls, text: str) -> LinguisticLabel:
        """Parse ``"SMI"`` or ``"1/SMI"`` (the latter is the reciprocal)."""
        text = text.strip()
        if text.startswith("1/"):
            return cls(Importance(text[2:].strip().upper()), Direction.RECIPROCAL)
        return cls(Importance(text.upper()))


_STANDARD_FORWARD = {
    Importance.JE: (1.0, 1.0, 1.0),
    Importance.EI: (0.5, 1.0, 1.5),
    Importance.WI: (1.0, 1.5, 2.0),
    Importance.SMI: (1.5, 2.0, 2.5),
    Importance.VSMI: (2.0, 2.5, 3.0),
    Importance.AMI: (2.5, 3.0, 3.5),
}
# Published (rounded) reciprocals; these differ slightly from 1/u, 1/m, 1/l.
_STANDARD_RECIPROCAL = {
    Importance.JE: (1.0, 1.0, 1.0),
    Importance.EI: (0.6, 1.0, 2.0),
    Importance.WI: (0.5, 0.6, 1.0),
    Importance.SMI: (0.4, 0.5, 0.6),
    Importance.VSMI: (0.3, 0.4, 0.5),
    Importance.AMI: (0.2, 0.3, 0.4),
}


@dataclass(frozen=True)
class LinguisticScale:
    """Lookup table from scale level to forward and reciprocal TFNs."""

    forward: Mapping[Importance, TFN]
    reciprocal: Mapping[Importance, TFN]

    def __post_init__(self) -> None:
        for table in (self.forward, self.reciprocal):
            missing = set(Importance) - set(table)
            if missing:
                raise DomainError(f"scale lacks levels {sorted(m.value for m in missing)}")
            for level, tfn in table.items():
                if not tfn.is_positive:
                    raise DomainError(f"scale value for {level.value} must be positive, got {tfn!r}")
        if self.forward[Importance.JE] != ONE or self.reciprocal[Importance.JE] != ONE:
            raise DomainError("JE must map to (1, 1, 1)")

    @classmethod
    def standard(cls) -> LinguisticScale:
        return cls(
            {k: TFN(*v) for k, v in _STANDARD_FORWARD.items()},
            {k: TFN(*v) for k, v in _STANDARD_RECIPROCAL.items()},
        )

    def with_overrides(self, overrides: Mapping[Importance, tuple[TFN | None, TFN | None]]) -> LinguisticScale:
        fwd = dict(self.forward)
        rec = dict(self.reciprocal)
        for level, (f, r) in overrides.items():
            if f is not None:
                fwd[level] = f
            if r is not None:
                rec[level] = r
        return LinguisticScale(fwd, rec)

    def lookup(self, j: LinguisticLabel) -> TFN:
        table = self.forward if j.direction is Direction.FORWARD else self.reciprocal
        return table[j.label]

    def is_published_pair(self, a: TFN, b: TFN, tol: float = RECIPROCITY_TOL) -> bool:
        """True when ``{a, b}`` is some level's forward/reciprocal pair."""
        for level in Importance:
            f, r = self.forward[level], self.reciprocal[level]
            if (a.isclose(f, abs_tol=tol) and b.isclose(r, abs_tol=tol)) or (
                a.isclose(r, abs_tol=tol) and b.isclose(f, abs_tol=tol)
            ):
                return True
        return False

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinguisticScale):
            return NotImplemented
        return dict(self.forward) == dict(other.forward) and dict(self.reciprocal) == dict(other.reciprocal)

    def __hash__(self) -> int:
        return hash((tuple(sorted(self.forward.items())), tuple(sorted(self.reciprocal.items()))))


DEFAULT_SCALE = LinguisticScale.standard()


def linguistic_to_tfn(j: LinguisticLabel, scale: LinguisticScale = DEFAULT_SCALE) -> TFN:
    return scale.lookup(j)


@dataclass(frozen=True)
class ExpertJudgment:
    expert_id: Hashable
    row: int
    col: int
    value: LinguisticLabel

    def __post_init__(self) -> None:
        if self.row == self.col:
            raise DomainError(f"diagonal judgment ({self.row}, {self.col}) is not allowed")

    def oriented(self) -> tuple[tuple[int, int], LinguisticLabel]:
        """Return the judgment re-expressed on the upper-triangle cell."""
        if self.row < self.col:
            return (self.row, self.col), self.value
        return (self.col, self.row), self.value.flipped()


def aggregate_judgments(values: Iterable[TFN]) -> TFN:
    """Componentwise geometric mean of several experts' TFNs."""
    values = list(values)
    if not values:
        raise DomainError("cannot aggregate an empty list of judgments")
    for v in values:
        if not v.is_positive:
            raise DomainError(f"geometric mean needs positive TFNs, got {v!r}")
    if len(values) == 1:
        return values[0]
    k = len(values)
    return TFN(*(math.exp(math.fsum(math.log(getattr(v, c)) for v in values) / k) for c in "lmu"))


@dataclass(frozen=True)
class FuzzyComparisonMatrix:
    """Square reciprocal matrix of TFN pairwise judgments.

    A transposed pair is accepted as reciprocal when one cell is the
    arithmetic inverse of the other, or when the two cells are a
    forward/reciprocal pair of ``scale`` (published reciprocals are rounded).
    """

    cells: tuple[tuple[TFN, ...], ...]
    scale: LinguisticScale = field(default=DEFAULT_SCALE, compare=False, repr=False)

    def __post_init__(self) -> None:
        cells = tuple(tuple(row) for row in self.cells)
        object.__setattr__(self, "cells", cells)
        n = len(cells)
        if n < 2:
            raise DimensionError(f"comparison matrix needs n >= 2, got {n}")
        for i, row in enumerate(cells):
            if len(row) != n:
                raise DimensionError(f"row {i} has {len(row)} cells, expected {n}")
            for c in row:
                if not isinstance(c, TFN):
                    raise TypeError(f"matrix cells must be TFN, got {c!r}")
                if not c.is_positive:
                    raise DomainError(f"matrix cells must be positive, got {c!r} in row {i}")
        for i in range(n):
            if cells[i][i] != ONE:
                raise ReciprocityError(f"diagonal cell ({i}, {i}) is {cells[i][i]!r}, expected (1, 1, 1)")
            for j in range(i + 1, n):
                a, b = cells[i][j], cells[j][i]
                if tfn_inverse(a).isclose(b, abs_tol=RECIPROCITY_TOL):
                    continue
                if self.scale.is_published_pair(a, b):
                    continue
                raise ReciprocityError(f"cells ({i}, {j})={a!r} and ({j}, {i})={b!r} are not reciprocal")

    @property
    def n(self) -> int:
        return len(self.cells)

    def __getitem__(self, ij: tuple[int, int]) -> TFN:
        i, j = ij
        return self.cells[i][j]

    def rows(self) -> Sequence[tuple[TFN, ...]]:
        return self.cells

    def to_array(self) -> np.ndarray:
        """Cells as an ``(n, n, 3)`` float array."""
        return np.array([[c.as_tuple() for c in row] for row in self.cells], dtype=float)

    def permuted(self, order: Sequence[int]) -> FuzzyComparisonMatrix:
        """Reorder rows and columns simultaneously."""
        if sorted(order) != list(range(self.n)):
            raise DimensionError(f"{list(order)} is not a permutation of range({self.n})")
        return FuzzyComparisonMatrix(
            tuple(tuple(self.cells[i][j] for j in order) for i in order), self.scale
        )

    def upper_triangle(self) -> dict[tuple[int, int], TFN]:
        return {(i, j): self.cells[i][j] for i in range(self.n) for j in range(i + 1, self.n)}


def build_matrix(
    n: int,
    upper_triangle: Mapping[tuple[int, int], TFN],
    scale: LinguisticScale = DEFAULT_SCALE,
) -> FuzzyComparisonMatrix:
    """Complete a matrix from its upper triangle by arithmetic inversion."""
    if n < 2:
        raise DimensionError(f"comparison matrix needs n >= 2, got {n}")
    for i, j in upper_triangle:
        if not (0 <= i < j < n):
            raise DimensionError(f"({i}, {j}) is not an upper-triangle cell of a {n}x{n} matrix")
    grid = [[ONE] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            try:
                v = upper_triangle[(i, j)]
            except KeyError:
                raise MissingPairError((i, j)) from None
            grid[i][j] = v
            grid[j][i] = tfn_inverse(v)
    return FuzzyComparisonMatrix(tuple(map(tuple, grid)), scale)


def matrix_from_judgments(
    n: int,
    judgments: Iterable[ExpertJudgment],
    scale: LinguisticScale = DEFAULT_SCALE,
) -> FuzzyComparisonMatrix:
    """Aggregate raw expert judgments into one comparison matrix.

    Each judgment is moved to its upper-triangle cell (flipping direction
    for lower-triangle answers), mapped through ``scale``, and the experts
    who answered a pair are combined by geometric mean. Experts who skipped
    a pair are simply absent from that pair's mean.
    """
    per_cell: dict[tuple[int, int], list[TFN]] = defaultdict(list)
    for j in judgments:
        if not (0 <= j.row < n and 0 <= j.col < n):
            raise DimensionError(f"judgment ({j.row}, {j.col}) outside a {n}x{n} matrix")
        cell, label = j.oriented()
        per_cell[cell].append(scale.lookup(label))
    upper = {cell: aggregate_judgments(vs) for cell, vs in per_cell.items()}
    return build_matrix(n, upper, scale)
