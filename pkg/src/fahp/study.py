"""Study documents: loading, validation and serialization.

A study is a single JSON document::

    {
      "goal": "...",
      "scale": {"VSMI": {"forward": [2, 2.5, 3], "reciprocal": [0.3, 0.4, 0.5]}},
      "categories": [{"id": "P1", "name": "...", "criteria": [{"id": "C1", "name": "..."}]}],
      "category_matrix": <matrix>,
      "matrices": {"P1": <matrix>},
      "survey": [{"id": "C1", "sa": 26, "a": 43, "n": 12, "d": 4, "sd": 8}],
      "options": {"strict": false, "decimals": 6}
    }

A matrix is either pre-aggregated, ``{"n": 4, "cells": [{"i": 0, "j": 1, "tfn": [l, m, u]}]}``
(upper triangle, full, or any mix covering every pair), or raw,
``{"n": 4, "judgments": [{"expert": "E1", "i": 0, "j": 1, "label": "SMI", "direction": "forward"}]}``.
Cell indices are 0-based integers or the ids of the compared elements.
``scale``, ``survey`` and ``options`` are optional.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Any, Iterable, Mapping, Sequence

from .errors import FAHPError, StudyParseError, StudySchemaError
from .fuzzy import ONE, TFN, tfn_inverse
from .hierarchy import CATEGORY_MATRIX_KEY, Category, Criterion, DecisionHierarchy
from .judgments import (
    DEFAULT_SCALE,
    Direction,
    ExpertJudgment,
    FuzzyComparisonMatrix,
    Importance,
    LinguisticLabel,
    LinguisticScale,
    matrix_from_judgments,
)
from .survey import LIKERT_LEVELS, LikertCounts, tally_responses

__all__ = [
    "BUNDLED_STUDIES",
    "MatrixSpec",
    "CategorySpec",
    "StudyOptions",
    "StudyFile",
    "parse_study",
    "load_study",
    "study_to_dict",
    "dump_study",
    "read_judgments_csv",
    "read_responses_csv",
    "resolve_study_path",
]

BUNDLED_STUDIES = ("paper_category_study",)

_TOP_KEYS = {"goal", "scale", "categories", "category_matrix", "matrices", "survey", "options"}


@dataclass(frozen=True)
class MatrixSpec:
    """A matrix as written in the study: explicit cells or raw judgments."""

    n: int
    cells: tuple[tuple[int, int, TFN], ...] = ()
    judgments: tuple[ExpertJudgment, ...] = ()

    @property
    def is_raw(self) -> bool:
        return bool(self.judgments)

    def build(self, scale: LinguisticScale = DEFAULT_SCALE) -> FuzzyComparisonMatrix:
        if self.is_raw:
            return matrix_from_judgments(self.n, self.judgments, scale)
        return _matrix_from_cells(self.n, self.cells, scale)


def _matrix_from_cells(n: int, cells: Iterable[tuple[int, int, TFN]], scale: LinguisticScale) -> FuzzyComparisonMatrix:
    given: dict[tuple[int, int], TFN] = {}
    for i, j, v in cells:
        given[(i, j)] = v
    grid = [[ONE] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            up, lo = given.get((i, j)), given.get((j, i))
            if up is None and lo is None:
                raise FAHPError(f"no comparison supplied for pair ({i}, {j})")
            grid[i][j] = up if up is not None else tfn_inverse(lo)
            grid[j][i] = lo if lo is not None else tfn_inverse(up)
    return FuzzyComparisonMatrix(tuple(map(tuple, grid)), scale)


@dataclass(frozen=True)
class CategorySpec:
    id: str
    name: str
    criteria: tuple[Criterion, ...]


@dataclass(frozen=True)
class StudyOptions:
    strict: bool = False
    decimals: int = 6


@dataclass(frozen=True)
class StudyFile:
    goal: str
    categories: tuple[CategorySpec, ...]
    category_matrix: MatrixSpec
    matrices: Mapping[str, MatrixSpec]
    scale_overrides: Mapping[Importance, tuple[TFN | None, TFN | None]] = field(default_factory=dict)
    survey: tuple[LikertCounts, ...] = ()
    options: StudyOptions = StudyOptions()

    @property
    def scale(self) -> LinguisticScale:
        if not self.scale_overrides:
            return DEFAULT_SCALE
        return DEFAULT_SCALE.with_overrides(self.scale_overrides)

    @property
    def criteria_count(self) -> int:
        return sum(len(c.criteria) for c in self.categories)

    def matrix_ids(self) -> list[str]:
        return [CATEGORY_MATRIX_KEY] + [c.id for c in self.categories if c.id in self.matrices]

    def build_matrices(self) -> dict[str, FuzzyComparisonMatrix]:
        scale = self.scale
        return {
            CATEGORY_MATRIX_KEY: self.category_matrix.build(scale),
            **{cid: spec.build(scale) for cid, spec in self.matrices.items()},
        }

    def hierarchy(self, matrices: Mapping[str, FuzzyComparisonMatrix] | None = None) -> DecisionHierarchy:
        if matrices is None:
            matrices = self.build_matrices()
        return DecisionHierarchy(
            self.goal,
            tuple(Category(c.id, c.name, c.criteria, matrices.get(c.id)) for c in self.categories),
        )

    def warnings(self) -> list[str]:
        return [
            f"category {c.id} has a single criterion; its local weight is 1"
            for c in self.categories
            if len(c.criteria) == 1
        ]

    def aggregated(self) -> StudyFile:
        """Copy with every raw-judgment matrix replaced by its aggregated upper triangle."""
        built = self.build_matrices()

        def cells_of(key: str, spec: MatrixSpec) -> MatrixSpec:
            if not spec.is_raw:
                return spec
            upper = built[key].upper_triangle()
            return MatrixSpec(spec.n, tuple((i, j, v) for (i, j), v in upper.items()))

        return replace(
            self,
            category_matrix=cells_of(CATEGORY_MATRIX_KEY, self.category_matrix),
            matrices={k: cells_of(k, v) for k, v in self.matrices.items()},
        )


# --------------------------------------------------------------------------
# parsing
# --------------------------------------------------------------------------


def _expect(cond: bool, path: str, message: str) -> None:
    if not cond:
        raise StudySchemaError(path, message)


def _str(doc: Mapping, key: str, path: str, *, required: bool = True, default: str = "") -> str:
    if key not in doc:
        _expect(not required, f"{path}.{key}" if path else key, "missing required field")
        return default
    v = doc[key]
    _expect(isinstance(v, str) and v != "", f"{path}.{key}" if path else key, f"expected a non-empty string, got {v!r}")
    return v


def _number(v: Any, path: str) -> float:
    _expect(
        isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v),
        path,
        f"expected a finite number, got {v!r}",
    )
    return float(v)


def _tfn(v: Any, path: str) -> TFN:
    _expect(isinstance(v, list) and len(v) == 3, path, f"expected [l, m, u], got {v!r}")
    l, m, u = (_number(x, f"{path}[{k}]") for k, x in enumerate(v))
    _expect(l <= m <= u, path, f"TFN must satisfy l <= m <= u, got {v!r}")
    _expect(l > 0, path, f"judgment TFN must be positive, got {v!r}")
    return TFN(l, m, u)


def _int(v: Any, path: str) -> int:
    _expect(isinstance(v, int) and not isinstance(v, bool), path, f"expected an integer, got {v!r}")
    return v


def _index(v: Any, ids: Sequence[str], path: str) -> int:
    if isinstance(v, str):
        _expect(v in ids, path, f"unknown element id {v!r}; expected one of {list(ids)}")
        return ids.index(v)
    i = _int(v, path)
    _expect(0 <= i < len(ids), path, f"index {i} out of range for {len(ids)} elements")
    return i


def _label(rec: Mapping, path: str) -> LinguisticLabel:
    _expect("label" in rec, f"{path}.label", "missing required field")
    raw = rec["label"]
    _expect(isinstance(raw, str), f"{path}.label", f"expected a string, got {raw!r}")
    try:
        lab = LinguisticLabel.parse(raw)
    except ValueError:
        raise StudySchemaError(f"{path}.label", f"unknown linguistic label {raw!r}") from None
    if "direction" in rec:
        d = rec["direction"]
        try:
            direction = Direction(d)
        except ValueError:
            raise StudySchemaError(f"{path}.direction", f"direction must be 'forward' or 'reciprocal', got {d!r}") from None
        if direction is Direction.RECIPROCAL:
            if lab.direction is Direction.RECIPROCAL:
                raise StudySchemaError(path, "label already written as a reciprocal")
            try:
                lab = LinguisticLabel(lab.label, Direction.RECIPROCAL)
            except ValueError as exc:
                raise StudySchemaError(f"{path}.direction", str(exc)) from None
    return lab


def _parse_matrix(doc: Any, ids: Sequence[str], scale: LinguisticScale, path: str) -> MatrixSpec:
    _expect(isinstance(doc, dict), path, "expected a matrix object")
    unknown = set(doc) - {"n", "cells", "judgments"}
    _expect(not unknown, path, f"unknown fields {sorted(unknown)}")
    _expect("n" in doc, f"{path}.n", "missing required field")
    n = _int(doc["n"], f"{path}.n")
    _expect(n == len(ids), f"{path}.n", f"dimension {n} does not match the {len(ids)} compared elements")
    has_cells, has_judgments = "cells" in doc, "judgments" in doc
    _expect(has_cells != has_judgments, path, "give exactly one of 'cells' or 'judgments'")

    if has_cells:
        cells_doc = doc["cells"]
        _expect(isinstance(cells_doc, list), f"{path}.cells", "expected a list")
        cells: list[tuple[int, int, TFN]] = []
        seen: set[tuple[int, int]] = set()
        for k, c in enumerate(cells_doc):
            cp = f"{path}.cells[{k}]"
            _expect(isinstance(c, dict), cp, "expected a cell object")
            for key in ("i", "j", "tfn"):
                _expect(key in c, f"{cp}.{key}", "missing required field")
            i, j = _index(c["i"], ids, f"{cp}.i"), _index(c["j"], ids, f"{cp}.j")
            v = _tfn(c["tfn"], f"{cp}.tfn")
            _expect((i, j) not in seen, cp, f"duplicate cell ({i}, {j})")
            seen.add((i, j))
            if i == j:
                _expect(v == ONE, f"{cp}.tfn", "diagonal cells must be [1, 1, 1]")
                continue
            cells.append((i, j, v))
        spec = MatrixSpec(n, tuple(cells))
    else:
        jdoc = doc["judgments"]
        _expect(isinstance(jdoc, list) and jdoc, f"{path}.judgments", "expected a non-empty list")
        judgments: list[ExpertJudgment] = []
        seen_j: set[tuple[Any, tuple[int, int]]] = set()
        for k, rec in enumerate(jdoc):
            jp = f"{path}.judgments[{k}]"
            _expect(isinstance(rec, dict), jp, "expected a judgment object")
            for key in ("expert", "i", "j"):
                _expect(key in rec, f"{jp}.{key}", "missing required field")
            expert = rec["expert"]
            _expect(isinstance(expert, (str, int)) and not isinstance(expert, bool), f"{jp}.expert", "expected a string or integer id")
            i, j = _index(rec["i"], ids, f"{jp}.i"), _index(rec["j"], ids, f"{jp}.j")
            _expect(i != j, jp, "diagonal judgments are not allowed")
            ej = ExpertJudgment(expert, i, j, _label(rec, jp))
            key_ = (expert, ej.oriented()[0])
            _expect(key_ not in seen_j, jp, f"expert {expert!r} judges pair {key_[1]} more than once")
            seen_j.add(key_)
            judgments.append(ej)
        spec = MatrixSpec(n, judgments=tuple(judgments))

    try:
        spec.build(scale)
    except FAHPError as exc:
        raise StudySchemaError(path, str(exc)) from None
    return spec


def _parse_scale(doc: Any) -> dict[Importance, tuple[TFN | None, TFN | None]]:
    _expect(isinstance(doc, dict), "scale", "expected an object keyed by label")
    out: dict[Importance, tuple[TFN | None, TFN | None]] = {}
    for key, entry in doc.items():
        p = f"scale.{key}"
        try:
            level = Importance(key)
        except ValueError:
            raise StudySchemaError(p, f"unknown linguistic label {key!r}") from None
        _expect(isinstance(entry, dict) and entry and set(entry) <= {"forward", "reciprocal"}, p,
                "expected {'forward': [l, m, u], 'reciprocal': [l, m, u]} (either key optional)")
        fwd = _tfn(entry["forward"], f"{p}.forward") if "forward" in entry else None
        rec = _tfn(entry["reciprocal"], f"{p}.reciprocal") if "reciprocal" in entry else None
        out[level] = (fwd, rec)
    try:
        DEFAULT_SCALE.with_overrides(out)
    except ValueError as exc:
        raise StudySchemaError("scale", str(exc)) from None
    return out


def _parse_survey(doc: Any) -> tuple[LikertCounts, ...]:
    _expect(isinstance(doc, list), "survey", "expected a list")
    rows: list[LikertCounts] = []
    seen: set[str] = set()
    for k, rec in enumerate(doc):
        p = f"survey[{k}]"
        _expect(isinstance(rec, dict), p, "expected an object")
        item = _str(rec, "id", p)
        _expect(item not in seen, f"{p}.id", f"duplicate survey item {item!r}")
        seen.add(item)
        counts = []
        for level in LIKERT_LEVELS:
            _expect(level in rec, f"{p}.{level}", "missing required field")
            v = _int(rec[level], f"{p}.{level}")
            _expect(v >= 0, f"{p}.{level}", "counts must be non-negative")
            counts.append(v)
        _expect(sum(counts) > 0, p, "item has no responses")
        rows.append(LikertCounts(item, *counts))
    return tuple(rows)


def _parse_options(doc: Any) -> StudyOptions:
    _expect(isinstance(doc, dict), "options", "expected an object")
    unknown = set(doc) - {"strict", "decimals"}
    _expect(not unknown, "options", f"unknown fields {sorted(unknown)}")
    strict = doc.get("strict", False)
    _expect(isinstance(strict, bool), "options.strict", "expected true or false")
    decimals = _int(doc.get("decimals", 6), "options.decimals")
    _expect(0 <= decimals <= 15, "options.decimals", "expected 0..15")
    return StudyOptions(strict, decimals)


def parse_study(doc: Any) -> StudyFile:
    """Validate a decoded JSON document and build a :class:`StudyFile`."""
    _expect(isinstance(doc, dict), "", "study must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    _expect(not unknown, "", f"unknown top-level fields {sorted(unknown)}")
    goal = _str(doc, "goal", "")

    overrides = _parse_scale(doc["scale"]) if "scale" in doc else {}
    scale = DEFAULT_SCALE.with_overrides(overrides) if overrides else DEFAULT_SCALE

    _expect("categories" in doc, "categories", "missing required field")
    cats_doc = doc["categories"]
    _expect(isinstance(cats_doc, list) and len(cats_doc) >= 2, "categories", "expected a list of at least 2 categories")
    categories: list[CategorySpec] = []
    cat_ids: list[str] = []
    crit_ids: set[str] = set()
    for k, c in enumerate(cats_doc):
        p = f"categories[{k}]"
        _expect(isinstance(c, dict), p, "expected a category object")
        cid = _str(c, "id", p)
        _expect(cid != CATEGORY_MATRIX_KEY, f"{p}.id", f"{CATEGORY_MATRIX_KEY!r} is reserved")
        _expect(cid not in cat_ids, f"{p}.id", f"duplicate category id {cid!r}")
        cat_ids.append(cid)
        name = _str(c, "name", p, required=False, default=cid)
        _expect("criteria" in c, f"{p}.criteria", "missing required field")
        crit_doc = c["criteria"]
        _expect(isinstance(crit_doc, list) and crit_doc, f"{p}.criteria", "expected a non-empty list")
        criteria = []
        for q, cr in enumerate(crit_doc):
            cp = f"{p}.criteria[{q}]"
            _expect(isinstance(cr, dict), cp, "expected a criterion object")
            crid = _str(cr, "id", cp)
            _expect(crid not in crit_ids and crid not in cat_ids, f"{cp}.id", f"duplicate id {crid!r}")
            crit_ids.add(crid)
            criteria.append(Criterion(crid, _str(cr, "name", cp, required=False, default=crid)))
        categories.append(CategorySpec(cid, name, tuple(criteria)))
    _expect(not (set(cat_ids) & crit_ids), "categories", "category and criterion ids overlap")

    _expect("category_matrix" in doc, "category_matrix", "missing required field")
    category_matrix = _parse_matrix(doc["category_matrix"], cat_ids, scale, "category_matrix")

    mats_doc = doc.get("matrices", {})
    _expect(isinstance(mats_doc, dict), "matrices", "expected an object keyed by category id")
    stray = set(mats_doc) - set(cat_ids)
    _expect(not stray, "matrices", f"matrices for unknown categories {sorted(stray)}")
    matrices: dict[str, MatrixSpec] = {}
    for cat in categories:
        p = f"matrices.{cat.id}"
        ids = [c.id for c in cat.criteria]
        if len(ids) == 1:
            _expect(cat.id not in mats_doc, p, "a single-criterion category takes no matrix")
            continue
        _expect(cat.id in mats_doc, p, f"missing matrix for category {cat.id!r}")
        matrices[cat.id] = _parse_matrix(mats_doc[cat.id], ids, scale, p)

    survey = _parse_survey(doc["survey"]) if "survey" in doc else ()
    options = _parse_options(doc["options"]) if "options" in doc else StudyOptions()
    return StudyFile(goal, tuple(categories), category_matrix, matrices, overrides, survey, options)


def resolve_study_path(path: str | Path):
    """Return a readable path; bare bundled names resolve to package data."""
    p = Path(path)
    if not p.exists() and str(path) in BUNDLED_STUDIES:
        return resources.files("fahp.data").joinpath(f"{path}.json")
    return p


def load_study(
    path: str | Path,
    *,
    judgments_csv: str | Path | None = None,
    responses_csv: str | Path | None = None,
) -> StudyFile:
    """Read and validate a study file.

    ``judgments_csv`` supplies raw expert judgments for matrices (replacing
    whatever the document gives for those matrices); ``responses_csv``
    supplies per-respondent Likert answers that replace the survey counts.
    Raises :class:`OSError` on I/O failure, :class:`StudyParseError` on
    malformed JSON and :class:`StudySchemaError` on invalid content.
    """
    text = resolve_study_path(path).read_text(encoding="utf-8")
    if not text.strip():
        raise StudyParseError(f"{path}: empty document")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StudyParseError(f"{path}: {exc}") from None
    if isinstance(doc, dict):
        if judgments_csv is not None:
            doc = _merge_judgments(doc, read_judgments_csv(judgments_csv))
        if responses_csv is not None:
            doc = {**doc, "survey": [c.to_dict() for c in read_responses_csv(responses_csv)]}
    return parse_study(doc)


# --------------------------------------------------------------------------
# CSV importers
# --------------------------------------------------------------------------

_JUDGMENT_HEADER = ("matrix", "expert", "row", "col", "label")


def _csv_rows(path: str | Path, required: Sequence[str]) -> list[dict[str, str]]:
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames or []
        missing = [h for h in required if h not in header]
        if missing:
            raise StudySchemaError(f"{path}", f"CSV header lacks columns {missing}")
        return list(reader)


def read_judgments_csv(path: str | Path) -> dict[str, list[dict[str, Any]]]:
    """Read ``matrix,expert,row,col,label[,direction]`` rows grouped by matrix.

    ``matrix`` is ``category_matrix`` or a category id; ``row``/``col`` are
    element ids or 0-based indices.
    """
    grouped: dict[str, list[dict[str, Any]]] = {}
    for line, row in enumerate(_csv_rows(path, _JUDGMENT_HEADER), start=2):
        rec: dict[str, Any] = {"expert": row["expert"], "label": row["label"]}
        for src, dst in (("row", "i"), ("col", "j")):
            v = row[src].strip()
            rec[dst] = int(v) if v.lstrip("-").isdigit() else v
        if row.get("direction"):
            rec["direction"] = row["direction"].strip()
        if not row["matrix"]:
            raise StudySchemaError(f"{path}:{line}", "empty matrix column")
        grouped.setdefault(row["matrix"].strip(), []).append(rec)
    return grouped


def _merge_judgments(doc: dict, grouped: Mapping[str, list[dict]]) -> dict:
    doc = dict(doc)
    cats = doc.get("categories") if isinstance(doc.get("categories"), list) else []
    sizes = {c.get("id"): len(c.get("criteria", [])) for c in cats if isinstance(c, dict)}
    matrices = dict(doc.get("matrices") or {})
    for key, recs in grouped.items():
        if key == CATEGORY_MATRIX_KEY:
            doc[CATEGORY_MATRIX_KEY] = {"n": len(cats), "judgments": recs}
        elif key in sizes:
            matrices[key] = {"n": sizes[key], "judgments": recs}
        else:
            raise StudySchemaError(f"judgments.{key}", "unknown matrix id")
    doc["matrices"] = matrices
    return doc


def read_responses_csv(path: str | Path) -> list[LikertCounts]:
    """Tally ``respondent,item,response`` rows (response SA/A/N/D/SD)."""
    rows = _csv_rows(path, ("respondent", "item", "response"))
    seen: set[tuple[str, str]] = set()
    pairs = []
    for line, row in enumerate(rows, start=2):
        key = (row["respondent"], row["item"])
        if key in seen:
            raise StudySchemaError(f"{path}:{line}", f"respondent {key[0]!r} answers item {key[1]!r} twice")
        seen.add(key)
        pairs.append((row["item"], row["response"]))
    try:
        return tally_responses(pairs)
    except ValueError as exc:
        raise StudySchemaError(str(path), str(exc)) from None


# --------------------------------------------------------------------------
# serialization
# --------------------------------------------------------------------------


def _matrix_to_dict(spec: MatrixSpec) -> dict:
    if spec.is_raw:
        return {
            "n": spec.n,
            "judgments": [
                {
                    "expert": j.expert_id,
                    "i": j.row,
                    "j": j.col,
                    "label": j.value.label.value,
                    "direction": j.value.direction.value,
                }
                for j in spec.judgments
            ],
        }
    return {"n": spec.n, "cells": [{"i": i, "j": j, "tfn": list(v.as_tuple())} for i, j, v in spec.cells]}


def study_to_dict(study: StudyFile) -> dict:
    doc: dict[str, Any] = {"goal": study.goal}
    if study.scale_overrides:
        doc["scale"] = {
            level.value: {
                k: list(v.as_tuple()) for k, v in zip(("forward", "reciprocal"), pair) if v is not None
            }
            for level, pair in study.scale_overrides.items()
        }
    doc["categories"] = [
        {"id": c.id, "name": c.name, "criteria": [{"id": cr.id, "name": cr.name} for cr in c.criteria]}
        for c in study.categories
    ]
    doc["category_matrix"] = _matrix_to_dict(study.category_matrix)
    doc["matrices"] = {k: _matrix_to_dict(v) for k, v in study.matrices.items()}
    if study.survey:
        doc["survey"] = [c.to_dict() for c in study.survey]
    doc["options"] = {"strict": study.options.strict, "decimals": study.options.decimals}
    return doc


def dump_study(study: StudyFile) -> str:
    return json.dumps(study_to_dict(study), indent=2) + "\n"
