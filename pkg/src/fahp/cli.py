"""Command-line interface.

Usage::

    fahp validate STUDY
    fahp aggregate STUDY [--judgments CSV] [--out PATH]
    fahp rank STUDY [--strict] [--format json|markdown] [--out PATH]
    fahp survey STUDY [--responses CSV] [--format json|markdown] [--out PATH]
    fahp kendall RATINGS.csv [--no-tie-correction] [--format json|markdown]

STUDY is a path to a study JSON file or the name of a bundled study
(``paper_category_study``).

Exit codes: 0 success, 1 usage or I/O error, 2 invalid study or input
file, 3 consistency failure in strict mode.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .errors import ConsistencyFailure, FAHPError, StudyParseError, StudySchemaError
from .report import FORMATS, emit_report, emit_survey, run_rank, survey_table
from .study import dump_study, load_study
from .survey import RaterMatrix, kendall_test

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SCHEMA = 2
EXIT_INCONSISTENT = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _load(args):
    return load_study(
        args.study,
        judgments_csv=getattr(args, "judgments", None),
        responses_csv=getattr(args, "responses", None),
    )


def _warn(lines) -> None:
    for w in lines:
        print(f"warning: {w}", file=sys.stderr)


def cmd_validate(args) -> int:
    study = _load(args)
    _warn(study.warnings())
    raw = sum(1 for m in [study.category_matrix, *study.matrices.values()] if m.is_raw)
    print(
        f"ok: {len(study.categories)} categories, {study.criteria_count} criteria, "
        f"{1 + len(study.matrices)} matrices ({raw} from raw judgments), {len(study.survey)} survey items"
    )
    return EXIT_OK


def cmd_aggregate(args) -> int:
    _write(dump_study(_load(args).aggregated()), args.out)
    return EXIT_OK


def cmd_rank(args) -> int:
    study = _load(args)
    strict = True if args.strict else None
    try:
        bundle = run_rank(study, strict=strict)
    except ConsistencyFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    _warn(bundle.warnings)
    _write(emit_report(bundle, args.format), args.out)
    return EXIT_OK


def cmd_survey(args) -> int:
    study = _load(args)
    if not study.survey:
        print("warning: study has no survey data", file=sys.stderr)
    _write(emit_survey(survey_table(study.survey), args.format), args.out)
    return EXIT_OK


def _read_ratings(path: str) -> RaterMatrix:
    records = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = [h for h in ("rater", "item", "rank") if h not in (reader.fieldnames or [])]
        if missing:
            raise StudySchemaError(path, f"CSV header lacks columns {missing}")
        for line, row in enumerate(reader, start=2):
            try:
                rank = float(row["rank"])
            except (TypeError, ValueError):
                raise StudySchemaError(f"{path}:{line}", f"rank must be a number, got {row['rank']!r}") from None
            records.append((row["rater"], row["item"], rank))
    try:
        return RaterMatrix.from_records(records)
    except ValueError as exc:
        raise StudySchemaError(path, str(exc)) from None


def cmd_kendall(args) -> int:
    res = kendall_test(_read_ratings(args.ratings), tie_correction=not args.no_tie_correction)
    if args.format == "json":
        text = json.dumps(
            {
                "w": round(res.w, 6),
                "chi2": round(res.chi2, 6),
                "df": res.df,
                "p_value": round(res.p_value, 6),
                "raters": res.m,
                "items": res.n,
                "tie_corrected": res.tie_corrected,
            },
            indent=2,
        ) + "\n"
    else:
        text = "\n".join(
            [
                "| W | chi2 | df | p | raters | items | tie corrected |",
                "|---|---|---|---|---|---|---|",
                f"| {res.w:.6f} | {res.chi2:.6f} | {res.df} | {res.p_value:.6f} | {res.m} | {res.n} | "
                f"{'yes' if res.tie_corrected else 'no'} |",
            ]
        ) + "\n"
    _write(text, args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fahp", description="Fuzzy AHP prioritization engine.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def study_cmd(name, help_, func):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("study", help="study JSON file or bundled study name")
        sp.set_defaults(func=func)
        return sp

    sp = study_cmd("validate", "check a study file", cmd_validate)
    sp.add_argument("--judgments", help="CSV of raw expert judgments")
    sp.add_argument("--responses", help="CSV of per-respondent Likert answers")

    sp = study_cmd("aggregate", "aggregate raw judgments into TFN cells", cmd_aggregate)
    sp.add_argument("--judgments", help="CSV of raw expert judgments")
    sp.add_argument("--out", help="write to PATH instead of stdout")

    # "report" is "rank" with markdown as the default format
    for name, help_, fmt in (
        ("rank", "weight and rank all criteria", "json"),
        ("report", "ranked taxonomy as a markdown report", "markdown"),
    ):
        sp = study_cmd(name, help_, cmd_rank)
        sp.add_argument("--strict", action="store_true", help="fail if any matrix has CR >= 0.10")
        sp.add_argument("--format", choices=FORMATS, default=fmt)
        sp.add_argument("--out", help="write to PATH instead of stdout")
        sp.add_argument("--judgments", help="CSV of raw expert judgments")
        sp.add_argument("--responses", help="CSV of per-respondent Likert answers")

    sp = study_cmd("survey", "Likert frequency table", cmd_survey)
    sp.add_argument("--format", choices=FORMATS, default="json")
    sp.add_argument("--out", help="write to PATH instead of stdout")
    sp.add_argument("--responses", help="CSV of per-respondent Likert answers")

    sp = sub.add_parser("kendall", help="Kendall's W for a rater,item,rank CSV")
    sp.add_argument("ratings")
    sp.add_argument("--no-tie-correction", action="store_true")
    sp.add_argument("--format", choices=FORMATS, default="json")
    sp.add_argument("--out", help="write to PATH instead of stdout")
    sp.set_defaults(func=cmd_kendall)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (StudyParseError, StudySchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except FAHPError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
