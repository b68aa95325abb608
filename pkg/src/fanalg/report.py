"""Structured pass/fail reports produced by the verification operations.

Failures are report entries, not exceptions: callers inspect ``report.ok``.
``findings`` hold non-fatal observations (e.g. a coefficient that is not a
signed p-monomial) that are worth surfacing but do not fail a check.
"""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self):
        d = {"name": self.name, "passed": self.passed}
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass
class ValidationReport:
    checks: list[Check] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)

    def add(self, name: str, passed, detail: str = "") -> "ValidationReport":
        self.checks.append(Check(name, bool(passed), detail))
        return self

    def note(self, finding: str) -> None:
        self.findings.append(finding)

    def extend(self, other: "ValidationReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail))
        self.findings.extend(other.findings)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_dict(self):
        return {
            "ok": self.ok,
            "checks": [c.to_dict() for c in self.checks],
            "findings": list(self.findings),
        }

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"[{mark}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        for f in self.findings:
            lines.append(f"[note] {f}")
        return "\n".join(lines) if lines else "(no checks)"
