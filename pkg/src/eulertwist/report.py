"""Verification reports: named pass/fail checks with JSON witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List


@dataclass
class Check:
    name: str
    passed: bool
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": bool(self.passed)}
        if self.witness:
            out["witness"] = self.witness
        return out


class Report:
    """Ordered collection of checks; serialization sorts by check name."""

    def __init__(self, name: str, params: Dict[str, Any] | None = None):
        self.name = name
        self.params = dict(params or {})
        self.checks: List[Check] = []
        self.data: Dict[str, Any] = {}

    def add(self, name: str, passed: bool, **witness) -> bool:
        self.checks.append(Check(name, bool(passed), witness))
        return bool(passed)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "params": self.params,
            "passed": self.passed,
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
        }
        if self.data:
            out["data"] = self.data
        return out

    def __repr__(self):
        bad = len(self.failures())
        return f"<Report {self.name}: {len(self.checks)} checks, {bad} failed>"
