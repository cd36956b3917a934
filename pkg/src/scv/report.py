"""Run reports: canonical ordering, summaries, and json/csv/text rendering.

Reports are deterministic byte-for-byte for identical inputs, except for the
elapsed_seconds field: checks are stably sorted by check name and then by
parameters, and all serialization uses sorted keys.  Witnesses are decimal
strings, never truncated.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

from .congruences import CheckResult

REPORT_SCHEMA: dict = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["version", "invocation", "checks", "summary", "elapsed_seconds"],
    "additionalProperties": False,
    "properties": {
        "version": {"type": "string"},
        "invocation": {"type": "object"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "check_name",
                    "parameters",
                    "pass",
                    "skipped",
                    "lhs_witness",
                    "rhs_witness",
                    "modulus",
                ],
                "additionalProperties": False,
                "properties": {
                    "check_name": {"type": "string"},
                    "parameters": {"type": "object"},
                    "pass": {"type": "boolean"},
                    "skipped": {"type": "boolean"},
                    "lhs_witness": {"type": "string"},
                    "rhs_witness": {"type": "string"},
                    "modulus": {"type": "string"},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["pass", "fail", "skipped"],
            "additionalProperties": False,
            "properties": {
                "pass": {"type": "integer"},
                "fail": {"type": "integer"},
                "skipped": {"type": "integer"},
            },
        },
        "elapsed_seconds": {"type": "number"},
    },
}


def _param_sort_token(value: object) -> tuple:
    if isinstance(value, bool):
        return (2, str(value))
    if isinstance(value, int):
        return (0, value)
    return (1, str(value))


def check_sort_key(check: CheckResult) -> tuple:
    params = tuple(
        (k, _param_sort_token(v)) for k, v in sorted(check.parameters.items())
    )
    return (check.check_name, params)


def sort_checks(checks: list[CheckResult]) -> list[CheckResult]:
    return sorted(checks, key=check_sort_key)


@dataclass
class RunReport:
    """One CLI invocation's worth of checks plus bookkeeping."""

    tool_version: str
    invocation: dict[str, object]
    checks: list[CheckResult] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for c in self.checks if c.passed and not c.skipped)
        skipped = sum(1 for c in self.checks if c.skipped)
        return {
            "pass": passed,
            "fail": len(self.checks) - passed - skipped,
            "skipped": skipped,
        }

    @property
    def failures(self) -> int:
        return self.summary["fail"]

    def to_dict(self) -> dict[str, object]:
        return {
            "version": self.tool_version,
            "invocation": dict(self.invocation),
            "checks": [c.to_dict() for c in sort_checks(self.checks)],
            "summary": self.summary,
            "elapsed_seconds": self.elapsed_seconds,
        }


def render_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"


def _params_compact(parameters: dict[str, object]) -> str:
    return ";".join(f"{k}={v}" for k, v in sorted(parameters.items()))


def render_csv(report: RunReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(
        ["check_name", "parameters", "pass", "skipped", "lhs_witness", "rhs_witness", "modulus"]
    )
    for c in sort_checks(report.checks):
        writer.writerow(
            [
                c.check_name,
                _params_compact(c.parameters),
                str(c.passed).lower(),
                str(c.skipped).lower(),
                c.lhs_witness,
                c.rhs_witness,
                c.modulus,
            ]
        )
    return buf.getvalue()


_WITNESS_PREVIEW = 48


def _shorten(s: str) -> str:
    if len(s) <= _WITNESS_PREVIEW:
        return s
    return s[: _WITNESS_PREVIEW - 3] + "..."


def render_text(report: RunReport) -> str:
    lines = []
    for c in sort_checks(report.checks):
        status = "SKIP" if c.skipped else ("PASS" if c.passed else "FAIL")
        detail = _params_compact(c.parameters)
        if c.skipped:
            lines.append(f"{status} {c.check_name} {detail} ({c.lhs_witness})")
        elif c.passed:
            lines.append(f"{status} {c.check_name} {detail}")
        else:
            lines.append(
                f"{status} {c.check_name} {detail} "
                f"lhs={_shorten(c.lhs_witness)} rhs={_shorten(c.rhs_witness)} mod {c.modulus}"
            )
    s = report.summary
    lines.append(
        f"{s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped "
        f"in {report.elapsed_seconds:.2f}s"
    )
    return "\n".join(lines) + "\n"
