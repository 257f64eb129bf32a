"""
Report printing shared by the subcommands
"""
import json
from typing import Any, Iterable

from packages.strata.reports import FormulaReport

from ..core.config import settings
from ..metrics import record_report


def dump_json(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=settings.JSON_INDENT, ensure_ascii=False)


def emit(args, payload: Any, text: str) -> None:
    """Print the machine-readable payload with --json, the human text otherwise"""
    print(dump_json(payload) if getattr(args, "json", False) else text)


def format_rows(rows: Iterable[Iterable[int]]) -> str:
    rows = [list(r) for r in rows]
    width = max((len(str(v)) for r in rows for v in r), default=1)
    return "\n".join("    [" + " ".join(str(v).rjust(width) for v in r) + "]" for r in rows)


def report_exit_code(reports: Iterable[FormulaReport]) -> int:
    """0 when every report passed, 1 otherwise; each outcome is counted in metrics"""
    code = 0
    for report in reports:
        record_report(report)
        if not report.passed:
            code = 1
    return code
