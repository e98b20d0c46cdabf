"""JSON-lines output: canonical encoding, report digests, plain-text tables."""
import hashlib
import json
import sys
from collections.abc import Iterable
from pathlib import Path
from typing import Any

from config import settings
from schemas import TheoremFailure, TheoremReport


def dumps(record: Any) -> str:
    """Canonical JSON: sorted keys, no whitespace, so equal records give equal bytes."""
    return json.dumps(record, separators=(",", ":"), sort_keys=True, ensure_ascii=False)


def report_digest(failures: list[TheoremFailure]) -> str:
    payload = dumps([failure.model_dump(mode="json") for failure in failures]).encode()
    return hashlib.sha256(payload).hexdigest()


def report_lines(report: TheoremReport) -> list[str]:
    """One line per failure, then the summary line."""
    lines = [dumps({"type": "failure", "check": report.id, **failure.model_dump(mode="json")})
             for failure in report.failures]
    summary = report.model_dump(mode="json", exclude={"failures", "runtime"})
    summary.update(type="summary", failures=len(report.failures), digest=report_digest(report.failures))
    if settings.report_timings:
        summary["runtime"] = report.runtime
    lines.append(dumps(summary))
    return lines


def write_lines(lines: Iterable[str], out: str | None = None) -> None:
    text = "".join(line + "\n" for line in lines)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def render_table(rows: list[dict[str, Any]], columns: list[str]) -> str:
    cells = [[str(row.get(column, "")) for column in columns] for row in rows]
    widths = [max([len(column)] + [len(line[i]) for line in cells]) for i, column in enumerate(columns)]
    def fmt(values: list[str]) -> str:
        return "  ".join(value.ljust(width) for value, width in zip(values, widths)).rstrip()
    body = [fmt(columns), fmt(["-" * width for width in widths])] + [fmt(line) for line in cells]
    return "\n".join(body)
