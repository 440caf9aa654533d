"""Pass/fail records shared by the verification routines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    check: str
    passed: bool
    detail: Any = None

    def to_json(self) -> dict:
        return {"check": self.check, "pass": bool(self.passed), "detail": self.detail}


@dataclass
class Report:
    checks: list[Check] = field(default_factory=list)

    def add(self, check: str, passed: bool, detail: Any = None) -> Check:
        c = Check(check, bool(passed), detail)
        self.checks.append(c)
        return c

    def extend(self, other: Report) -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.check == name:
                return c
        raise KeyError(name)

    def to_json(self) -> list[dict]:
        return [c.to_json() for c in self.checks]

    def lines(self) -> list[str]:
        return [f"{'PASS' if c.passed else 'FAIL'}  {c.check}" + (f"  {c.detail}" if c.detail not in (None, "") else "")
                for c in self.checks]


__all__ = ["Check", "Report"]
