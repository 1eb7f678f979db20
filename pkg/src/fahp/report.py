"""Ranking pipeline and report rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .errors import ConsistencyFailure
from .hierarchy import CATEGORY_MATRIX_KEY, RankedTaxonomy, evaluate_hierarchy
from .study import StudyFile
from .survey import LikertCounts, frequency_analysis

__all__ = ["SurveyRow", "ReportBundle", "survey_table", "run_rank", "emit_report", "emit_survey"]

FORMATS = ("json", "markdown")


@dataclass(frozen=True)
class SurveyRow:
    item_id: str
    total: int
    positive: int
    negative: int
    neutral: int

    def to_dict(self) -> dict:
        return {
            "id": self.item_id,
            "total": self.total,
            "positive": self.positive,
            "negative": self.negative,
            "neutral": self.neutral,
        }


@dataclass(frozen=True)
class ReportBundle:
    taxonomy: RankedTaxonomy
    survey: tuple[SurveyRow, ...] = ()
    warnings: tuple[str, ...] = ()
    names: dict[str, str] = field(default_factory=dict)
    decimals: int = 6

    @property
    def consistency(self):
        return self.taxonomy.consistency

    @property
    def weights(self):
        return self.taxonomy.weights


def survey_table(counts: tuple[LikertCounts, ...]) -> tuple[SurveyRow, ...]:
    return tuple(SurveyRow(c.item_id, c.total, *frequency_analysis(c)) for c in counts)


def run_rank(study: StudyFile, strict: bool | None = None) -> ReportBundle:
    """Build all matrices, check consistency, weight and rank.

    With ``strict`` (default: the study's own option) any matrix with
    CR >= 0.10 raises :class:`ConsistencyFailure`; otherwise those matrices
    are reported as warnings and the ranking still completes.
    """
    if strict is None:
        strict = study.options.strict
    taxonomy = evaluate_hierarchy(study.hierarchy(), study.category_matrix.build(study.scale))
    bad = {k: taxonomy.consistency[k].cr for k in taxonomy.inconsistent}
    if strict and bad:
        raise ConsistencyFailure(bad)

    warnings = list(study.warnings())
    warnings += [f"matrix {k} is inconsistent (CR = {cr:.6f} >= 0.10)" for k, cr in bad.items()]
    for key, wv in taxonomy.weights.items():
        ids = [c.id for c in study.categories] if key == CATEGORY_MATRIX_KEY else [
            c.id for c in next(cat for cat in study.categories if cat.id == key).criteria
        ]
        warnings += [
            f"{ident} receives zero weight in matrix {key} (its extent is fully dominated)"
            for ident, w in zip(ids, wv.raw)
            if w == 0.0
        ]
    names = {c.id: c.name for c in study.categories}
    names.update({cr.id: cr.name for c in study.categories for cr in c.criteria})
    return ReportBundle(taxonomy, survey_table(study.survey), tuple(warnings), names, study.options.decimals)


def _rounded(obj: Any, nd: int) -> Any:
    if isinstance(obj, float):
        r = round(obj, nd)
        return 0.0 if r == 0 else r
    if isinstance(obj, dict):
        return {k: _rounded(v, nd) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_rounded(v, nd) for v in obj]
    return obj


def report_dict(bundle: ReportBundle) -> dict:
    tax = bundle.taxonomy
    cats = sorted(tax.categories, key=lambda c: c.rank)
    doc: dict[str, Any] = {
        "goal": tax.goal,
        "category_weights": {c.id: c.weight for c in tax.categories},
        "local": {c.id: c.local_weight for c in tax.criteria},
        "global": {c.id: c.global_weight for c in tax.criteria},
        "ranks": {
            "categories": {c.id: c.rank for c in tax.categories},
            "local": {c.id: c.local_rank for c in tax.criteria},
            "global": {c.id: c.global_rank for c in tax.criteria},
        },
        "categories": [
            {
                "id": c.id,
                "name": c.name,
                "weight": c.weight,
                "rank": c.rank,
                "criteria": [
                    x.id for x in sorted((x for x in tax.criteria if x.category_id == c.id), key=lambda x: x.local_rank)
                ],
            }
            for c in cats
        ],
        "criteria": [
            {
                "id": c.id,
                "name": c.name,
                "category": c.category_id,
                "local_weight": c.local_weight,
                "local_rank": c.local_rank,
                "global_weight": c.global_weight,
                "global_rank": c.global_rank,
            }
            for c in tax.by_global_rank()
        ],
        "matrices": {
            key: {"consistency": tax.consistency[key].to_dict(), "weights": tax.weights[key].to_dict()}
            for key in tax.consistency
        },
    }
    if bundle.survey:
        doc["survey"] = [r.to_dict() for r in bundle.survey]
    doc["warnings"] = list(bundle.warnings)
    return _rounded(doc, bundle.decimals)


def _fmt(x: float, nd: int) -> str:
    return f"{x:.{nd}f}"


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    out = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    out += ["| " + " | ".join(r) + " |" for r in rows]
    return out


def _survey_markdown(rows: tuple[SurveyRow, ...]) -> list[str]:
    return _table(
        ["Item", "Responses", "Positive %", "Negative %", "Neutral %"],
        [[r.item_id, str(r.total), str(r.positive), str(r.negative), str(r.neutral)] for r in rows],
    )


def report_markdown(bundle: ReportBundle) -> str:
    tax, nd = bundle.taxonomy, bundle.decimals
    cats = sorted(tax.categories, key=lambda c: c.rank)
    lines = ["# Category ranking: " + " > ".join(f"{c.name} ({_fmt(c.weight, nd)})" for c in cats), ""]
    lines += [f"Goal: {tax.goal}", ""]
    for c in cats:
        lines += [f"## {c.rank}. {c.name} (weight {_fmt(c.weight, nd)})", ""]
        members = sorted((x for x in tax.criteria if x.category_id == c.id), key=lambda x: x.local_rank)
        lines += _table(
            ["Criterion", "Name", "Local weight", "Local rank", "Global weight", "Global rank"],
            [
                [x.id, x.name, _fmt(x.local_weight, nd), str(x.local_rank), _fmt(x.global_weight, nd), str(x.global_rank)]
                for x in members
            ],
        )
        lines.append("")
    lines += ["## Global ranking", ""]
    lines += _table(
        ["Rank", "Criterion", "Name", "Category", "Global weight"],
        [
            [str(x.global_rank), x.id, x.name, bundle.names.get(x.category_id, x.category_id), _fmt(x.global_weight, nd)]
            for x in tax.by_global_rank()
        ],
    )
    lines += ["", "## Consistency", ""]
    lines += _table(
        ["Matrix", "n", "lambda_max", "CI", "CR", "Consistent"],
        [
            [k, str(r.n), _fmt(r.lambda_max, nd), _fmt(r.ci, nd), _fmt(r.cr, nd), "yes" if r.consistent else "no"]
            for k, r in tax.consistency.items()
        ],
    )
    if bundle.survey:
        lines += ["", "## Survey", ""]
        lines += _survey_markdown(bundle.survey)
    if bundle.warnings:
        lines += ["", "## Warnings", ""]
        lines += [f"- {w}" for w in bundle.warnings]
    return "\n".join(lines) + "\n"


def emit_report(bundle: ReportBundle, format: str = "json") -> str:
    if format == "json":
        return json.dumps(report_dict(bundle), indent=2) + "\n"
    if format == "markdown":
        return report_markdown(bundle)
    raise ValueError(f"unknown report format {format!r}; expected one of {FORMATS}")


def emit_survey(rows: tuple[SurveyRow, ...], format: str = "json") -> str:
    if format == "json":
        return json.dumps([r.to_dict() for r in rows], indent=2) + "\n"
    if format == "markdown":
        return "\n".join(_survey_markdown(rows)) + "\n" if rows else ""
    raise ValueError(f"unknown report format {format!r}; expected one of {FORMATS}")
