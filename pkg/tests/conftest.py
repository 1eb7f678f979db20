import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fahp.fuzzy import TFN  # noqa: E402
from fahp.judgments import FuzzyComparisonMatrix  # noqa: E402
from fahp.study import load_study  # noqa: E402

import reference_data as ref  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


def as_matrix(rows) -> FuzzyComparisonMatrix:
    return FuzzyComparisonMatrix(tuple(tuple(TFN(*c) for c in row) for row in rows))


@pytest.fixture
def category_matrix():
    return as_matrix(ref.CATEGORY_TFN)


@pytest.fixture(scope="session")
def fixture_study():
    return load_study("paper_category_study")


# --- acceptance summary: one line per criterion -------------------------------

_acceptance: dict[str, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_ac"):
        return
    key = name.split("_")[1]  # "ac1", "ac2", ...
    _acceptance.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_acceptance, key=lambda k: int(k[2:])):
        outcomes = _acceptance[key]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {key[2:]:>2}  ({len(outcomes)} checks)")
