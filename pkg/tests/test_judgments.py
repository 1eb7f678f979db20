import math
from decimal import Decimal, getcontext
import pytest
from hypothesis import given, strategies as st

from fahp.errors import DimensionError, DomainError, MissingPairError, ReciprocityError
from fahp.fuzzy import ONE, TFN
from fahp.judgments import (
    DEFAULT_SCALE,
    Direction,
    ExpertJudgment,
    FuzzyComparisonMatrix,
    Importance,
    LinguisticLabel,
    LinguisticScale,
    aggregate_judgments,
    build_matrix,
    linguistic_to_tfn,
    matrix_from_judgments,
)

import reference_data as ref
from conftest import as_matrix

FWD, REC = Direction.FORWARD, Direction.RECIPROCAL


# --- scale -------------------------------------------------------------------


@pytest.mark.parametrize(
    "label, direction, expected",
    [
        ("JE", FWD, (1, 1, 1)),
        ("EI", FWD, (0.5, 1, 1.5)),
        ("WI", FWD, (1, 1.5, 2)),
        ("SMI", FWD, (1.5, 2, 2.5)),
        ("VSMI", FWD, (2, 2.5, 3)),
        ("AMI", FWD, (2.5, 3, 3.5)),
        ("EI", REC, (0.6, 1, 2)),
        ("WI", REC, (0.5, 0.6, 1)),
        ("SMI", REC, (0.4, 0.5, 0.6)),
        ("VSMI", REC, (0.3, 0.4, 0.5)),
        ("AMI", REC, (0.2, 0.3, 0.4)),
    ],
)
def test_scale_lookup(label, direction, expected):
    assert linguistic_to_tfn(LinguisticLabel(Importance(label), direction)).as_tuple() == expected


def test_je_has_no_reciprocal():
    with pytest.raises(DomainError):
        LinguisticLabel(Importance.JE, REC)
    assert LinguisticLabel(Importance.JE).flipped() == LinguisticLabel(Importance.JE)


def test_label_parse():
    assert LinguisticLabel.parse("smi") == LinguisticLabel(Importance.SMI)
    assert LinguisticLabel.parse("1/AMI") == LinguisticLabel(Importance.AMI, REC)
    with pytest.raises(ValueError):
        LinguisticLabel.parse("XYZ")


def test_scale_overrides_and_validation():
    s = DEFAULT_SCALE.with_overrides({Importance.WI: (TFN(1, 1.4, 1.8), None)})
    assert s.forward[Importance.WI] == TFN(1, 1.4, 1.8)
    assert s.reciprocal[Importance.WI] == DEFAULT_SCALE.reciprocal[Importance.WI]
    with pytest.raises(DomainError):
        DEFAULT_SCALE.with_overrides({Importance.JE: (TFN(1, 2, 3), None)})
    assert LinguisticScale.standard() == DEFAULT_SCALE


def test_expert_judgment_orientation():
    j = ExpertJudgment("e1", 2, 0, LinguisticLabel(Importance.SMI))
    assert j.oriented() == ((0, 2), LinguisticLabel(Importance.SMI, REC))
    with pytest.raises(DomainError):
        ExpertJudgment("e1", 1, 1, LinguisticLabel(Importance.JE))


# --- aggregation -------------------------------------------------------------


def test_aggregate_idempotent():
    assert aggregate_judgments([TFN(2, 2.5, 3), TFN(2, 2.5, 3)]).isclose(TFN(2, 2.5, 3), abs_tol=1e-15)


def test_aggregate_simple_geometric_mean():
    assert aggregate_judgments([TFN.crisp(2), TFN.crisp(8)]).isclose(TFN.crisp(4), abs_tol=1e-14)


def test_aggregate_against_high_precision_oracle():
    values = [TFN(1, 1.5, 2), TFN(1.5, 2, 2.5), TFN(0.5, 1, 1.5)]
    getcontext().prec = 50
    expected = [
        (Decimal(str(a)) * Decimal(str(b)) * Decimal(str(c))) ** (Decimal(1) / Decimal(3))
        for a, b, c in zip(*(v.as_tuple() for v in values))
    ]
    got = aggregate_judgments(values)
    assert all(abs(Decimal(x) - e) < Decimal("1e-14") for x, e in zip(got, expected))


def test_aggregate_errors():
    with pytest.raises(DomainError):
        aggregate_judgments([])
    with pytest.raises(DomainError):
        aggregate_judgments([TFN(0, 1, 2)])


tfn_pos = st.tuples(*[st.integers(1, 4000)] * 3).map(lambda t: TFN(*sorted(x / 1000 for x in t)))


@given(tfn_pos)
def test_aggregate_single(v):
    assert aggregate_judgments([v]) == v


@given(st.lists(tfn_pos, min_size=1, max_size=8), st.randoms())
def test_aggregate_permutation_invariant(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    a, b = aggregate_judgments(values), aggregate_judgments(shuffled)
    assert a.isclose(b, abs_tol=1e-12)
    assert a.l <= a.m <= a.u


# --- matrices ----------------------------------------------------------------


def test_build_matrix_two_by_two():
    f = build_matrix(2, {(0, 1): TFN(1.5, 2, 2.5)})
    assert f[0, 0] == ONE and f[1, 1] == ONE
    assert f[0, 1] == TFN(1.5, 2, 2.5)
    # arithmetic inverse, not the rounded scale entry (0.4, 0.5, 0.6)
    assert f[1, 0].isclose(TFN(1 / 2.5, 1 / 2, 1 / 1.5), abs_tol=1e-15)


def test_build_matrix_indifference():
    f = build_matrix(2, {(0, 1): ONE})
    assert all(c == ONE for row in f.rows() for c in row)


def test_build_matrix_from_category_upper_triangle():
    published = as_matrix(ref.CATEGORY_TFN)
    built = build_matrix(4, published.upper_triangle())
    for i in range(4):
        for j in range(4):
            if i <= j:
                assert built[i, j] == published[i, j]
            else:
                assert built[i, j].isclose(published[j, i].inverse(), abs_tol=1e-15)
                # the published lower cell is the rounded scale pair of the upper one
                assert DEFAULT_SCALE.is_published_pair(published[j, i], published[i, j])


def test_build_matrix_errors():
    with pytest.raises(MissingPairError):
        build_matrix(3, {(0, 1): ONE, (0, 2): ONE})
    with pytest.raises(DimensionError):
        build_matrix(1, {})
    with pytest.raises(DimensionError):
        build_matrix(2, {(1, 0): ONE})


def test_matrix_invariants_enforced():
    with pytest.raises(ReciprocityError):
        FuzzyComparisonMatrix(((TFN(1, 1, 2), ONE), (ONE, ONE)))
    with pytest.raises(ReciprocityError):
        FuzzyComparisonMatrix(((ONE, TFN(1.5, 2, 2.5)), (TFN(1.5, 2, 2.5), ONE)))
    with pytest.raises(DimensionError):
        FuzzyComparisonMatrix(((ONE,),))
    with pytest.raises(DimensionError):
        FuzzyComparisonMatrix(((ONE, ONE), (ONE,)))


def test_published_pairs_accepted():
    # every printed sub-matrix uses the rounded reciprocal column
    for rows in (ref.CATEGORY_TFN, ref.AUTOMATION_TFN, ref.SHARING_TFN):
        as_matrix(rows)


def test_permuted_matrix_is_valid():
    f = as_matrix(ref.CATEGORY_TFN)
    g = f.permuted([2, 0, 3, 1])
    assert g[0, 1] == f[2, 0]
    with pytest.raises(DimensionError):
        f.permuted([0, 0, 1, 2])


@given(st.integers(2, 7), st.randoms())
def test_build_matrix_always_valid(n, rnd):
    labels = list(Importance)
    upper = {}
    for i in range(n):
        for j in range(i + 1, n):
            lab = rnd.choice(labels)
            d = FWD if lab is Importance.JE else rnd.choice([FWD, REC])
            upper[(i, j)] = linguistic_to_tfn(LinguisticLabel(lab, d))
    f = build_matrix(n, upper)
    assert f.n == n
    # re-validate through the constructor
    FuzzyComparisonMatrix(f.cells)


# --- raw expert judgments -------------------------------------------------


def test_matrix_from_judgments_geometric_mean():
    js = [
        ExpertJudgment("a", 0, 1, LinguisticLabel(Importance.SMI)),
        ExpertJudgment("b", 0, 1, LinguisticLabel(Importance.VSMI)),
        # expert c answered the transposed cell: C2 over C1 weakly, i.e. 1/WI for (0, 1)
        ExpertJudgment("c", 1, 0, LinguisticLabel(Importance.WI)),
    ]
    f = matrix_from_judgments(2, js)
    vals = [TFN(1.5, 2, 2.5), TFN(2, 2.5, 3), TFN(0.5, 0.6, 1)]
    expected = tuple(math.prod(getattr(v, c) for v in vals) ** (1 / 3) for c in "lmu")
    assert f[0, 1].isclose(TFN(*expected), abs_tol=1e-12)
    assert f[1, 0].isclose(f[0, 1].inverse(), abs_tol=1e-15)


def test_matrix_from_judgments_skips_missing_experts():
    js = [
        ExpertJudgment("a", 0, 1, LinguisticLabel(Importance.SMI)),
        ExpertJudgment("a", 0, 2, LinguisticLabel(Importance.WI)),
        ExpertJudgment("b", 0, 1, LinguisticLabel(Importance.SMI)),
        ExpertJudgment("b", 1, 2, LinguisticLabel(Importance.EI)),
    ]
    f = matrix_from_judgments(3, js)
    assert f[0, 2] == TFN(1, 1.5, 2)
    assert f[1, 2] == TFN(0.5, 1, 1.5)
    with pytest.raises(MissingPairError):
        matrix_from_judgments(3, js[:2])
