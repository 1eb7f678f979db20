"""Consistency checking of pairwise comparison matrices.

Fuzzy matrices are defuzzified cell by cell (graded mean), the crisp
priority vector is the row mean of the column-normalized matrix, and the
principal eigenvalue is estimated as the inner product of the column sums
with that vector.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, DomainError
from .fuzzy import graded_mean_defuzzify
from .judgments import FuzzyComparisonMatrix

__all__ = [
    "RANDOM_INDEX",
    "CR_THRESHOLD",
    "ConsistencyReport",
    "defuzzify_matrix",
    "as_crisp",
    "priority_vector",
    "lambda_max",
    "consistency_from_lambda",
    "crisp_consistency",
    "consistency_check",
    "principal_eigenvalue",
]

RANDOM_INDEX = {1: 0.0, 2: 0.0, 3: 0.58, 4: 0.9, 5: 1.12, 6: 1.24, 7: 1.32, 8: 1.41, 9: 1.45, 10: 1.49}
CR_THRESHOLD = 0.10


@dataclass(frozen=True)
class ConsistencyReport:
    n: int
    lambda_max: float
    ci: float
    cr: float
    ri: float
    consistent: bool
    priority_vector: tuple[float, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "lambda_max": self.lambda_max,
            "ci": self.ci,
            "cr": self.cr,
            "ri": self.ri,
            "consistent": self.consistent,
            "priority_vector": list(self.priority_vector),
        }


def defuzzify_matrix(f: FuzzyComparisonMatrix) -> np.ndarray:
    """Crisp matrix of graded-mean values; the diagonal stays exactly 1."""
    return np.array([[graded_mean_defuzzify(c) for c in row] for row in f.rows()], dtype=float)


def as_crisp(c) -> np.ndarray:
    """Validate ``c`` as a square positive matrix with unit diagonal."""
    a = np.asarray(c, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"crisp matrix must be square, got shape {a.shape}")
    if not np.all(np.isfinite(a)) or np.any(a <= 0):
        raise DomainError("crisp matrix entries must be finite and positive")
    if not np.allclose(np.diag(a), 1.0, rtol=0.0, atol=1e-12):
        raise DomainError("crisp matrix diagonal must be 1")
    return a


def priority_vector(c) -> np.ndarray:
    a = as_crisp(c)
    w = (a / a.sum(axis=0)).mean(axis=1)
    return w / w.sum()


def lambda_max(c, w) -> float:
    """Principal-eigenvalue estimate ``sum_j colsum_j * w_j``."""
    a = as_crisp(c)
    w = np.asarray(w, dtype=float)
    if w.shape != (a.shape[0],):
        raise DimensionError(f"weight vector of length {w.size} does not fit a {a.shape[0]}x{a.shape[0]} matrix")
    return float(a.sum(axis=0) @ w)


def consistency_from_lambda(lam: float, n: int) -> tuple[float, float, float]:
    """Return ``(ci, cr, ri)`` for an eigenvalue estimate of an n x n matrix.

    CR is 0 for n <= 2, where RI is 0 and every reciprocal matrix is consistent.
    """
    if n not in RANDOM_INDEX:
        raise DimensionError(f"random index is tabulated for 1 <= n <= 10, got n={n}")
    ri = RANDOM_INDEX[n]
    ci = (lam - n) / (n - 1) if n > 1 else 0.0
    cr = ci / ri if ri > 0 else 0.0
    return ci, cr, ri


def crisp_consistency(c) -> ConsistencyReport:
    a = as_crisp(c)
    n = a.shape[0]
    if not 2 <= n <= 10:
        raise DimensionError(f"consistency check supports 2 <= n <= 10, got n={n}")
    w = priority_vector(a)
    lam = lambda_max(a, w)
    ci, cr, ri = consistency_from_lambda(lam, n)
    return ConsistencyReport(n, lam, ci, cr, ri, cr < CR_THRESHOLD, tuple(float(x) for x in w))


def consistency_check(f: FuzzyComparisonMatrix) -> ConsistencyReport:
    return crisp_consistency(defuzzify_matrix(f))


def principal_eigenvalue(c, *, tol: float = 1e-13, max_iter: int = 10_000) -> float:
    """Perron eigenvalue of a positive matrix by power iteration.

    Used to cross-check the column-sum estimate; not part of the ranking path.
    """
    a = as_crisp(c)
    x = np.full(a.shape[0], 1.0 / a.shape[0])
    lam = 0.0
    for _ in range(max_iter):
        y = a @ x
        new = float(y.sum())  # x sums to 1, so this is the Rayleigh-like ratio
        y /= new
        if abs(new - lam) <= tol * new and np.max(np.abs(y - x)) <= tol:
            return new
        x, lam = y, new
    return lam
