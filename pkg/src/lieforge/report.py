"""Pass/fail records shared by the verification routines."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CaseReport:
    case_id: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def extend(self, other: CaseReport, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail))

    def lines(self) -> list[str]:
        """Human-readable lines; timing is left out so reruns compare equal."""
        out = [f"[{'PASS' if self.passed else 'FAIL'}] {self.case_id}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            out.append(f"  {mark} {c.name}" + (f": {c.detail}" if c.detail else ""))
        return out

    def json_lines(self) -> list[str]:
        return [json.dumps({"case": self.case_id, "check": c.name, "pass": c.passed,
                            "detail": c.detail}, sort_keys=True)
                for c in self.checks]
