"""Three-level decision hierarchy: goal, categories, criteria."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .consistency import ConsistencyReport, consistency_check
from .errors import DimensionError, DomainError
from .extent import WeightVector, extent_weights
from .judgments import FuzzyComparisonMatrix

__all__ = [
    "CATEGORY_MATRIX_KEY",
    "Criterion",
    "Category",
    "DecisionHierarchy",
    "CategoryResult",
    "CriterionResult",
    "RankedTaxonomy",
    "rank_order",
    "evaluate_hierarchy",
]

# Key used for the category-level matrix wherever matrices are keyed by id.
CATEGORY_MATRIX_KEY = "category_matrix"


@dataclass(frozen=True)
class Criterion:
    id: str
    name: str = ""


@dataclass(frozen=True)
class Category:
    id: str
    name: str
    criteria: tuple[Criterion, ...]
    matrix: FuzzyComparisonMatrix | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "criteria", tuple(self.criteria))
        k = len(self.criteria)
        if k == 0:
            raise DomainError(f"category {self.id!r} has no criteria")
        if k == 1:
            return
        if self.matrix is None:
            raise DomainError(f"category {self.id!r} has {k} criteria but no comparison matrix")
        if self.matrix.n != k:
            raise DimensionError(f"category {self.id!r}: {self.matrix.n}x{self.matrix.n} matrix for {k} criteria")


@dataclass(frozen=True)
class DecisionHierarchy:
    goal: str
    categories: tuple[Category, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "categories", tuple(self.categories))
        if len(self.categories) < 2:
            raise DomainError("a hierarchy needs at least two categories")
        seen: set[str] = set()
        for cat in self.categories:
            if cat.id in seen or cat.id == CATEGORY_MATRIX_KEY:
                raise DomainError(f"duplicate or reserved category id {cat.id!r}")
            seen.add(cat.id)
        crit_ids = [c.id for cat in self.categories for c in cat.criteria]
        dup = {c for c in crit_ids if crit_ids.count(c) > 1}
        if dup:
            raise DomainError(f"criterion ids must be unique, duplicated: {sorted(dup)}")


@dataclass(frozen=True)
class CategoryResult:
    id: str
    name: str
    weight: float
    rank: int


@dataclass(frozen=True)
class CriterionResult:
    id: str
    name: str
    category_id: str
    local_weight: float
    local_rank: int
    global_weight: float
    global_rank: int


@dataclass(frozen=True)
class RankedTaxonomy:
    goal: str
    categories: tuple[CategoryResult, ...]
    criteria: tuple[CriterionResult, ...]
    weights: dict[str, WeightVector] = field(default_factory=dict)
    consistency: dict[str, ConsistencyReport] = field(default_factory=dict)

    @property
    def inconsistent(self) -> tuple[str, ...]:
        """Ids of the matrices whose CR is at or above the threshold."""
        return tuple(k for k, r in self.consistency.items() if not r.consistent)

    def criterion(self, cid: str) -> CriterionResult:
        for c in self.criteria:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def category(self, cid: str) -> CategoryResult:
        for c in self.categories:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def by_global_rank(self) -> list[CriterionResult]:
        return sorted(self.criteria, key=lambda c: c.global_rank)


def rank_order(weights: Sequence[float]) -> list[int]:
    """1-based descending ranks; equal weights keep their input order."""
    if len(weights) == 0:
        raise DomainError("cannot rank an empty weight list")
    order = sorted(range(len(weights)), key=lambda i: -weights[i])
    ranks = [0] * len(weights)
    for r, i in enumerate(order, start=1):
        ranks[i] = r
    return ranks


def evaluate_hierarchy(h: DecisionHierarchy, category_matrix: FuzzyComparisonMatrix) -> RankedTaxonomy:
    """Weight every matrix by extent analysis and synthesize global weights.

    Inconsistent matrices do not stop the ranking; they are reported through
    :attr:`RankedTaxonomy.inconsistent`.
    """
    if category_matrix.n != len(h.categories):
        raise DimensionError(
            f"category matrix is {category_matrix.n}x{category_matrix.n} for {len(h.categories)} categories"
        )
    weights = {CATEGORY_MATRIX_KEY: extent_weights(category_matrix)}
    consistency = {CATEGORY_MATRIX_KEY: consistency_check(category_matrix)}
    for cat in h.categories:
        if cat.matrix is not None and len(cat.criteria) > 1:
            weights[cat.id] = extent_weights(cat.matrix)
            consistency[cat.id] = consistency_check(cat.matrix)

    cat_w = weights[CATEGORY_MATRIX_KEY].normalized
    cat_ranks = rank_order(cat_w)
    categories = tuple(
        CategoryResult(cat.id, cat.name, cat_w[k], cat_ranks[k]) for k, cat in enumerate(h.categories)
    )

    rows: list[tuple[Category, int, float, int]] = []
    global_w: list[float] = []
    for k, cat in enumerate(h.categories):
        local = weights[cat.id].normalized if cat.id in weights else (1.0,)
        local_ranks = rank_order(local)
        for idx in range(len(cat.criteria)):
            rows.append((cat, idx, local[idx], local_ranks[idx]))
            global_w.append(local[idx] * cat_w[k])
    global_ranks = rank_order(global_w)

    criteria = tuple(
        CriterionResult(
            id=cat.criteria[idx].id,
            name=cat.criteria[idx].name,
            category_id=cat.id,
            local_weight=lw,
            local_rank=lr,
            global_weight=gw,
            global_rank=gr,
        )
        for (cat, idx, lw, lr), gw, gr in zip(rows, global_w, global_ranks)
    )
    return RankedTaxonomy(h.goal, categories, criteria, weights, consistency)
