"""Likert frequency analysis and Kendall's coefficient of concordance."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple, Sequence

import numpy as np
from scipy import stats

from .errors import DimensionError, DomainError

__all__ = [
    "LIKERT_LEVELS",
    "LikertCounts",
    "Frequencies",
    "frequency_analysis",
    "tally_responses",
    "RaterMatrix",
    "KendallResult",
    "kendalls_w",
    "kendall_test",
]

LIKERT_LEVELS = ("sa", "a", "n", "d", "sd")


@dataclass(frozen=True)
class LikertCounts:
    item_id: str
    sa: int
    a: int
    n: int
    d: int
    sd: int

    def __post_init__(self) -> None:
        for level in LIKERT_LEVELS:
            v = getattr(self, level)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise DomainError(f"{self.item_id}: count {level!r} must be a non-negative integer, got {v!r}")

    @property
    def total(self) -> int:
        return self.sa + self.a + self.n + self.d + self.sd

    def to_dict(self) -> dict:
        return {"id": self.item_id, **{k: getattr(self, k) for k in LIKERT_LEVELS}}


class Frequencies(NamedTuple):
    positive: int
    negative: int
    neutral: int


def _percent_half_up(k: int, total: int) -> int:
    # round(100 k / total) with halves rounded up, in exact integer arithmetic
    return (200 * k + total) // (2 * total)


def frequency_analysis(c: LikertCounts) -> Frequencies:
    """Positive (SA + A), negative (D + SD) and neutral shares in whole percent."""
    total = c.total
    if total <= 0:
        raise DomainError(f"{c.item_id}: no responses")
    return Frequencies(
        _percent_half_up(c.sa + c.a, total),
        _percent_half_up(c.d + c.sd, total),
        _percent_half_up(c.n, total),
    )


def tally_responses(rows: Iterable[tuple[str, str]]) -> list[LikertCounts]:
    """Count ``(item_id, response)`` pairs, response in SA/A/N/D/SD.

    Items keep their first-seen order.
    """
    counts: dict[str, Counter] = {}
    for item, response in rows:
        level = response.strip().lower().replace(".", "").replace(" ", "")
        if level not in LIKERT_LEVELS:
            raise DomainError(f"{item}: unknown Likert response {response!r}")
        counts.setdefault(item, Counter())[level] += 1
    return [LikertCounts(item, *(c[k] for k in LIKERT_LEVELS)) for item, c in counts.items()]


@dataclass(frozen=True)
class RaterMatrix:
    """``m x n`` ranks: one row per rater, tied items share their mid-rank."""

    ranks: np.ndarray
    raters: tuple[Hashable, ...] = ()
    items: tuple[Hashable, ...] = ()

    def __post_init__(self) -> None:
        r = np.array(self.ranks, dtype=float)
        r.setflags(write=False)
        object.__setattr__(self, "ranks", r)
        if r.ndim != 2:
            raise DimensionError(f"rank matrix must be 2-D, got shape {r.shape}")
        m, n = r.shape
        if m < 2 or n < 2:
            raise DimensionError(f"need at least 2 raters and 2 items, got {m} x {n}")
        for k, row in enumerate(r):
            if not np.array_equal(stats.rankdata(row), row):
                raise DomainError(f"row {k} is not a ranking of 1..{n} with mid-ranks for ties: {row.tolist()}")
        if self.raters and len(self.raters) != m:
            raise DimensionError("rater labels do not match the number of rows")
        if self.items and len(self.items) != n:
            raise DimensionError("item labels do not match the number of columns")

    @classmethod
    def from_scores(cls, scores: Sequence[Sequence[float]], raters=(), items=()) -> RaterMatrix:
        """Rank each rater's scores (1 = smallest), averaging ties."""
        s = np.asarray(scores, dtype=float)
        if s.ndim != 2:
            raise DimensionError(f"score matrix must be 2-D, got shape {s.shape}")
        return cls(np.vstack([stats.rankdata(row) for row in s]), tuple(raters), tuple(items))

    @classmethod
    def from_records(cls, records: Iterable[tuple[Hashable, Hashable, float]]) -> RaterMatrix:
        """Build from ``(rater, item, rank)`` triples; every rater must rank every item."""
        table: dict[Hashable, dict[Hashable, float]] = {}
        items: dict[Hashable, None] = {}
        for rater, item, rank in records:
            row = table.setdefault(rater, {})
            if item in row:
                raise DomainError(f"rater {rater!r} ranks item {item!r} twice")
            row[item] = rank
            items.setdefault(item, None)
        for rater, row in table.items():
            missing = [i for i in items if i not in row]
            if missing:
                raise DomainError(f"rater {rater!r} does not rank items {missing}")
        item_order = tuple(items)
        scores = [[table[r][i] for i in item_order] for r in table]
        return cls.from_scores(scores, tuple(table), item_order)

    @property
    def m(self) -> int:
        return self.ranks.shape[0]

    @property
    def n(self) -> int:
        return self.ranks.shape[1]


class KendallResult(NamedTuple):
    w: float
    chi2: float
    df: int
    p_value: float
    m: int
    n: int
    tie_corrected: bool


def _tie_term(row: np.ndarray) -> float:
    _, t = np.unique(row, return_counts=True)
    return float(np.sum(t.astype(float) ** 3 - t))


def kendalls_w(r: RaterMatrix, *, tie_correction: bool = True) -> float:
    """``W = 12 S / (m^2 (n^3 - n) - m T)``; ``T`` is 0 without tie correction."""
    m, n = r.m, r.n
    rank_sums = r.ranks.sum(axis=0)
    s = float(np.sum((rank_sums - rank_sums.mean()) ** 2))
    denom = m**2 * (n**3 - n)
    if tie_correction:
        denom -= m * sum(_tie_term(row) for row in r.ranks)
    if denom <= 0:
        # every rater tied every item: no ranking information at all
        return 0.0
    return min(max(12.0 * s / denom, 0.0), 1.0)


def kendall_test(r: RaterMatrix, *, tie_correction: bool = True) -> KendallResult:
    """W with its large-sample chi-square significance, ``chi2 = m (n - 1) W``."""
    w = kendalls_w(r, tie_correction=tie_correction)
    df = r.n - 1
    chi2 = r.m * df * w
    return KendallResult(w, chi2, df, float(stats.chi2.sf(chi2, df)), r.m, r.n, tie_correction)
