import csv
import json
import os

import pytest

from harness.event_logger import REPORT_FIELDS, EventLogger
from harness.grid_runner import GridRunner, GridSpec
from harness.identity_verifier import IDENTITY_IDS, IdentityVerifier
from harness.report_generator import ReportGenerator
from utils.errors import UsageError

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
DEFAULT_GRID = os.path.join(PROJECT_ROOT, "data", "grids", "default.json")

SMALL_GRID = {
    "K": 6,
    "guard_n": 10,
    "identities": {
        "eval1": {"n": [1, 2], "r": [0, 1]},
        "book-count": {"n": [1], "r": ["0", "1"], "s": ["0"]},
        "maj-integral": {"n": [1, 3], "r": ["1"], "s": ["1"]},
        "schur-form": {"n": [1], "r": ["0", "0,1"], "s": ["0", "1,0"]},
    },
}


def test_points_are_sorted_and_carry_k():
    spec = GridSpec.from_json(SMALL_GRID)
    points = spec.points()
    assert [p[0] for p in points] == sorted(p[0] for p in points)
    evals = [params for identity, params in points if identity == "eval1"]
    assert len(evals) == 4
    assert all(params["K"] == 6 for params in evals)
    counts = [params for identity, params in points if identity == "book-count"]
    assert all("K" not in params for params in counts)


def test_points_skip_mismatched_pages_and_large_posets():
    spec = GridSpec.from_json(SMALL_GRID)
    points = spec.points()
    schur = [params for identity, params in points if identity == "schur-form"]
    # "0" with "1,0" and "0,1" with "0" do not pair up
    assert len(schur) == 2
    assert spec.skipped == [("maj-integral", {"K": 6, "n": 3, "r": "1", "s": "1"})]


def test_unknown_identity_and_bad_entries():
    with pytest.raises(UsageError):
        GridSpec({"no-such-identity": {"n": [1]}})
    with pytest.raises(UsageError):
        GridSpec({"eval1": {"n": 1}})
    with pytest.raises(UsageError):
        GridSpec.from_json({"K": 3})


def test_unreadable_grid_file(tmp_path):
    with pytest.raises(UsageError):
        GridSpec.from_json(str(tmp_path / "missing.json"))
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    with pytest.raises(UsageError):
        GridSpec.from_json(str(broken))


def test_default_grid_loads():
    spec = GridSpec.from_json(DEFAULT_GRID)
    assert set(spec.identities) == set(IDENTITY_IDS)
    assert spec.K == 20


def test_run_grid(tmp_path):
    event_logger = EventLogger(log_dir=str(tmp_path))
    runner = GridRunner(verifier=IdentityVerifier(), event_logger=event_logger)
    results = runner.run_grid(GridSpec.from_json(SMALL_GRID))
    assert results["status"] == "completed"
    assert results["failed"] == 0
    assert results["passed"] == results["total"] == 9
    assert results["skipped"] == 1

    with open(event_logger.filepath, newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 9
    assert tuple(rows[0]) == REPORT_FIELDS
    assert all(row["error"] == "" for row in rows)


def test_run_grid_records_errors():
    grid = GridSpec({"selberg-single": {"n": [1], "r": [0], "s": [0], "m": [0, 1]}}, K=4)
    results = GridRunner().run_grid(grid)
    assert results["status"] == "completed_with_errors"
    assert len(results["errors"]) == 1
    assert results["errors"][0]["params"]["m"] == 0
    assert results["passed"] == 1


def test_report_generator(tmp_path):
    results = GridRunner().run_grid(GridSpec({"eval1": {"n": [1, 2], "r": [0]}}, K=5))
    generator = ReportGenerator()

    table = generator.build_table(results["reports"])
    assert list(table.columns) == ["identity", "params", "trunc_twice", "pass", "elapsed_ms"]
    assert len(table) == 2

    summary = generator.summarize(results["reports"])
    assert summary.loc["eval1", "checks"] == 2
    assert summary.loc["eval1", "failed"] == 0

    text = generator.generate_report(results)
    assert text.startswith("--- Verification Report ---")
    assert "Checks:    2 (2 passed, 0 failed)" in text

    rendered = json.loads(generator.render(results["reports"], "json"))
    assert [entry["pass"] for entry in rendered] == [True, True]
    assert "eval1" in generator.render(results["reports"], "table")

    path = generator.save_report_to_file(text, str(tmp_path / "out" / "report.txt"))
    assert path is not None
    assert (tmp_path / "out" / "report.txt").read_text() == text


def test_save_report_failure_returns_none(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    assert ReportGenerator().save_report_to_file("text", str(blocker / "report.txt")) is None


def test_summarize_empty():
    assert ReportGenerator().summarize([]).empty


def test_shared_parameter_layout():
    spec = GridSpec.from_json({
        "identities": ["qko", "eval1", "book-count"],
        "n": [1, 2],
        "r": [0, 1],
        "compositions": {"r": ["1", "1,0"], "s": ["0", "0,1"]},
        "K": 5,
    })
    assert spec.identities["eval1"] == {"n": [1, 2], "r": [0, 1]}
    assert spec.identities["qko"] == {"n": [1, 2], "r": ["1", "1,0"], "s": ["0", "0,1"]}
    points = spec.points()
    qko = [params for identity, params in points if identity == "qko"]
    # lengths must agree: ("1", "0") and ("1,0", "0,1") per n
    assert len(qko) == 4
    assert all(params["K"] == 5 for params in qko)
    assert all("K" not in params for identity, params in points if identity == "book-count")


def test_shared_layout_rejects_unknown_ids():
    with pytest.raises(UsageError):
        GridSpec.from_json({"identities": ["qko", "no-such-identity"], "n": [1]})
    with pytest.raises(UsageError):
        GridSpec.from_json({"identities": ["qko"], "compositions": ["1,0"]})


def test_points_drop_shapes_too_long_for_the_points():
    spec = GridSpec({
        "cauchy-c": {"N": [1, 2], "n": [1, 2]},
        "spinor-factor": {"lam": ["1", "1,1"], "N": [1, 2]},
        "ppar-profile": {"l": [1, 2], "r": [1], "mu": ["1,1"]},
    }, K=4)
    points = spec.points()
    assert [(p["N"], p["n"]) for i, p in points if i == "cauchy-c"] == [(1, 1), (2, 1), (2, 2)]
    assert len([p for i, p in points if i == "spinor-factor"]) == 3
    assert [p["l"] for i, p in points if i == "ppar-profile"] == [2]


def test_run_grid_in_shared_layout(tmp_path):
    spec = GridSpec.from_json({
        "identities": ["qko", "stanley"],
        "n": [1, 2],
        "compositions": {"r": ["0", "1"], "s": ["1", "0"]},
        "K": 6,
    })
    results = GridRunner().run_grid(spec)
    assert results["status"] == "completed"
    assert results["passed"] == results["total"] == 16


def test_event_logger_records_raised_points(tmp_path):
    event_logger = EventLogger(log_dir=str(tmp_path))
    grid = GridSpec({"selberg-single": {"n": [1], "r": [0], "s": [0], "m": [0, 1]}}, K=4)
    GridRunner(event_logger=event_logger).run_grid(grid)

    with open(event_logger.filepath, newline="") as f:
        rows = list(csv.DictReader(f))
    assert [row["identity"] for row in rows] == ["selberg-single", "selberg-single"]
    failed = [row for row in rows if row["error"]]
    assert len(failed) == 1
    assert failed[0]["params"] == "m=0, n=1, r=0, s=0"
    assert failed[0]["pass"] == "False"


def test_event_logger_replaces_a_foreign_header(tmp_path):
    stale = tmp_path / "verify_reports.csv"
    stale.write_text("timestamp,side,price\n2020-01-01,buy,1\n")
    event_logger = EventLogger(log_dir=str(tmp_path))
    event_logger.log_report(IdentityVerifier().verify_eval(1, 1, 0, K=4))

    with open(event_logger.filepath, newline="") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 1
    assert tuple(rows[0]) == REPORT_FIELDS
    assert rows[0]["identity"] == "eval1"
