"""Structured verification outcomes and their JSON / human renderings.

JSON keys are stable: ``id``, ``checks`` (each with ``claim``, ``status``,
``witness``, ``wall_time``, ``warnings``), ``seed`` and ``version``.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__

PASS = "PASS"
FAIL = "FAIL"
PARTIAL = "PARTIAL"
STATUSES = (PASS, FAIL, PARTIAL)


@dataclass
class CheckResult:
    claim: str
    status: str
    witness: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0
    warnings: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class VerificationReport:
    id: str
    checks: list[CheckResult] = field(default_factory=list)
    seed: int = 0
    version: str = __version__

    @property
    def all_pass(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def exit_code(self) -> int:
        return 0 if self.all_pass else 1

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "checks": [asdict(c) for c in self.checks],
            "seed": self.seed,
            "version": self.version,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        return cls(
            id=data["id"],
            checks=[CheckResult(**c) for c in data["checks"]],
            seed=data["seed"],
            version=data["version"],
        )


def emit_report(report: VerificationReport, format: str = "human") -> str:
    if format == "json":
        return json.dumps(report.to_dict(), indent=2, sort_keys=False)
    if format != "human":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"# {report.id}  (seed={report.seed}, version={report.version})"]
    for c in report.checks:
        note = f"  [{'; '.join(c.warnings)}]" if c.warnings else ""
        lines.append(f"{c.status:<7} {c.claim}  ({c.wall_time:.3f}s){note}")
    verdict = "ALL PASS" if report.all_pass else "FAILURES PRESENT"
    lines.append(f"-- {verdict}: {sum(c.passed for c in report.checks)}/{len(report.checks)}")
    return "\n".join(lines)


def parse_report(text: str) -> VerificationReport:
    return VerificationReport.from_dict(json.loads(text))
