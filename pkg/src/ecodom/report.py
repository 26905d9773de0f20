"""Compliance report assembly and rendering."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional

from . import __version__
from .ingest import dumps_canonical, serialize_building
from .model import BuildingModel
from .rules import Finding, PermeabilitySummary, Quantity, RuleId, Severity

REPORT_SCHEMA_VERSION = 1


class Verdict(str, Enum):
    COMPLIANT = "COMPLIANT"
    NON_COMPLIANT = "NON_COMPLIANT"


@dataclass(frozen=True)
class ComplianceReport:
    model_digest: str
    verdict: Verdict
    findings: tuple[Finding, ...]
    summaries: dict[str, Optional[PermeabilitySummary]]
    tool_version: str = __version__

    def count(self, severity: Severity) -> int:
        return sum(1 for f in self.findings if f.severity is severity)


def model_digest(model: BuildingModel) -> str:
    return hashlib.sha256(serialize_building(model).encode("utf-8")).hexdigest()


def build_report(model: BuildingModel, findings: list[Finding],
                 summaries: dict[str, Optional[PermeabilitySummary]]) -> ComplianceReport:
    ordered = tuple(sorted(findings, key=Finding.sort_key))
    failed = any(f.severity is Severity.FAIL for f in ordered)
    return ComplianceReport(
        model_digest=model_digest(model),
        verdict=Verdict.NON_COMPLIANT if failed else Verdict.COMPLIANT,
        findings=ordered,
        summaries={k: (v.rounded() if v else None) for k, v in sorted(summaries.items())},
    )


_VIOLATED = {">=": "<", "<=": ">", ">": "<=", "==": "!="}

_STYLE = {Severity.FAIL: "\033[31m", Severity.WARN: "\033[33m", Severity.INFO: "\033[36m"}
_RESET = "\033[0m"


def _header(report: ComplianceReport) -> str:
    n = len(report.findings)
    if n == 0:
        return f"{report.verdict.value} (0 findings)"
    counts = ", ".join(f"{report.count(s)} {s.value}" for s in Severity)
    return f"{report.verdict.value} ({n} findings: {counts})"


def render_text(report: ComplianceReport, color: bool = False) -> str:
    lines = [_header(report)]
    for f in report.findings:
        cmp = _VIOLATED[f.comparator] if f.severity is Severity.FAIL else f.comparator
        sev = f.severity.value
        if color:
            sev = f"{_STYLE[f.severity]}{sev}{_RESET}"
        line = f"{f.rule_id.value} {sev} {f.entity_path}: {f.measured} {cmp} {f.required} — {f.message}"
        lines.append(line)
        if f.remediation:
            lines.append(f"    fix: {f.remediation}")
    return "\n".join(lines) + "\n"


def _quantity(q: Quantity) -> dict:
    return {"value": float(q.value), "unit": q.unit}


def report_to_dict(report: ComplianceReport) -> dict:
    return {
        "schema_version": REPORT_SCHEMA_VERSION,
        "tool_version": report.tool_version,
        "model_digest": report.model_digest,
        "verdict": report.verdict.value,
        "counts": {s.value: report.count(s) for s in Severity},
        "findings": [
            {
                "rule_id": f.rule_id.value,
                "severity": f.severity.value,
                "dwelling": f.dwelling,
                "entity_path": f.entity_path,
                "measured": _quantity(f.measured),
                "required": _quantity(f.required),
                "comparator": f.comparator,
                "message": f.message,
                "remediation": f.remediation,
            }
            for f in report.findings
        ],
        "summaries": {
            k: ({name: (float(v) if isinstance(v, (int, float)) else v)
                 for name, v in asdict(s).items()} if s else None)
            for k, s in report.summaries.items()
        },
    }


def render_json(report: ComplianceReport) -> str:
    return dumps_canonical(report_to_dict(report)) + "\n"


def parse_report(text: str) -> ComplianceReport:
    data = json.loads(text)
    if data.get("schema_version") != REPORT_SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema version {data.get('schema_version')!r}")
    findings = tuple(
        Finding(
            rule_id=RuleId(f["rule_id"]),
            severity=Severity(f["severity"]),
            dwelling=f["dwelling"],
            entity_path=f["entity_path"],
            measured=Quantity(**f["measured"]),
            required=Quantity(**f["required"]),
            comparator=f["comparator"],
            message=f["message"],
            remediation=f["remediation"],
        )
        for f in data["findings"]
    )
    summaries = {k: (PermeabilitySummary(**s) if s else None)
                 for k, s in data["summaries"].items()}
    return ComplianceReport(
        model_digest=data["model_digest"],
        verdict=Verdict(data["verdict"]),
        findings=findings,
        summaries=summaries,
        tool_version=data["tool_version"],
    )
