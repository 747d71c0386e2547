"""Structured check reports shared by validation and the verification runner."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List

PASS = "PASS"
FAIL = "FAIL"
SURROGATE_PASS = "SURROGATE-PASS"
SURROGATE_FAIL = "SURROGATE-FAIL"
UNCHECKED = "UNCHECKED"
DECLARED = "DECLARED"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""

    def render(self) -> str:
        line = f"{self.status:<14} {self.name}"
        if self.detail:
            line += f": {self.detail}"
        return line


@dataclass
class ValidationReport:
    subject: str
    checks: List[CheckResult] = field(default_factory=list)

    def add(self, name: str, status: str, detail: str = "") -> None:
        self.checks.append(CheckResult(name, status, detail))

    def extend(self, other: "ValidationReport") -> None:
        self.checks.extend(other.checks)

    @property
    def ok(self) -> bool:
        """No hard failure; surrogate failures and unchecked items do not count."""
        return all(c.status != FAIL for c in self.checks)

    def render(self) -> str:
        lines = [f"validation: {self.subject}"]
        lines += ["  " + c.render() for c in self.checks]
        return "\n".join(lines)

    def to_records(self) -> list:
        return [
            {"subject": self.subject, "check": c.name, "status": c.status, "detail": c.detail}
            for c in self.checks
        ]
