import json
import os

os.environ.setdefault("LIMPACK_LOG_LEVEL", "WARNING")

from config import settings
from generators import path
from graph_io import to_graph6
from reports import dumps, render_table, report_digest, report_lines, write_lines
from schemas import TheoremFailure, TheoremReport
from tasks import evaluate_check


def sample_report() -> TheoremReport:
    return TheoremReport(id="T15", title="sample", graphs_tested=3, graphs_skipped=1,
                         skip_reasons={"empty_graph": 1},
                         failures=[TheoremFailure(graph6="Bw", observed={"sum": 9, "n": 3})], runtime=1.5)


def test_dumps_is_canonical():
    assert dumps({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'


def test_report_lines_failure_then_summary():
    lines = [json.loads(line) for line in report_lines(sample_report())]
    assert [line["type"] for line in lines] == ["failure", "summary"]
    assert lines[0] == {"type": "failure", "check": "T15", "graph6": "Bw", "observed": {"n": 3, "sum": 9}}
    summary = lines[1]
    assert summary["status"] == "fail"
    assert summary["failures"] == 1
    assert "runtime" not in summary
    assert summary["digest"] == report_digest(sample_report().failures)


def test_report_lines_are_reproducible():
    assert report_lines(sample_report()) == report_lines(sample_report())


def test_runtime_opt_in(monkeypatch):
    monkeypatch.setattr(settings, "report_timings", True)
    summary = json.loads(report_lines(sample_report())[-1])
    assert summary["runtime"] == 1.5


def test_write_lines(tmp_path, capsys):
    write_lines(["a", "b"])
    assert capsys.readouterr().out == "a\nb\n"
    target = tmp_path / "out.jsonl"
    write_lines(["x"], str(target))
    assert target.read_text(encoding="utf-8") == "x\n"


def test_render_table():
    table = render_table([{"id": "T1", "status": "pass"}], ["id", "status"])
    assert table.splitlines() == ["id  status", "--  ------", "T1  pass"]


def test_task_returns_outcome_json():
    result = evaluate_check("T15", to_graph6(path(3)))
    assert result["status"] == "pass"
    assert result["observed"] == {"sum": 5, "n": 3}
