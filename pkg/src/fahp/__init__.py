"""Fuzzy AHP (extent analysis) prioritization engine."""

from .consistency import ConsistencyReport, consistency_check, defuzzify_matrix, lambda_max, priority_vector
from .errors import (
    ConsistencyFailure,
    DimensionError,
    DomainError,
    FAHPError,
    MissingPairError,
    ReciprocityError,
    StudyParseError,
    StudySchemaError,
)
from .extent import ExtentVector, WeightVector, extent_weights, min_possibility, synthetic_extents
from .fuzzy import TFN, graded_mean_defuzzify, membership, possibility_degree
from .hierarchy import Category, Criterion, DecisionHierarchy, RankedTaxonomy, evaluate_hierarchy, rank_order
from .judgments import (
    DEFAULT_SCALE,
    Direction,
    ExpertJudgment,
    FuzzyComparisonMatrix,
    Importance,
    LinguisticLabel,
    aggregate_judgments,
    build_matrix,
    linguistic_to_tfn,
)
from .report import ReportBundle, emit_report, run_rank
from .study import StudyFile, load_study
from .survey import LikertCounts, RaterMatrix, frequency_analysis, kendalls_w

__version__ = "0.1.0"
