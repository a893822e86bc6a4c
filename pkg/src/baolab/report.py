"""Check reports: one record per check, stable field order, full witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass


@dataclass(frozen=True)
class CheckReport:
    check: str
    status: str
    witness: object = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {"check": self.check, "status": self.status,
                "witness": self.witness}


def report_from_findings(check: str, findings: list) -> CheckReport:
    if findings:
        return CheckReport(check=check, status="fail", witness=findings)
    return CheckReport(check=check, status="pass", witness=None)


def emit_report(results: list[CheckReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in results],
                          sort_keys=True, indent=2)
    lines = []
    for r in results:
        line = f"{r.check}: {r.status.upper()}"
        if r.witness is not None:
            line += f"  witness={json.dumps(r.witness, sort_keys=True)}"
        lines.append(line)
    return "\n".join(lines)


def exit_code(results: list[CheckReport]) -> int:
    return 0 if all(r.passed for r in results) else 1
