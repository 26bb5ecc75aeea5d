"""Structured verification reports.

A report is a list of named checks, each counting passing, failing and
vacuously passing instances. The first failure found is kept as a
self-contained counterexample that the CLI can replay.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: int = 0
    failed: int = 0
    vacuous: int = 0
    details: dict[str, Any] = field(default_factory=dict)

    def record(self, ok: bool, vacuous: bool = False) -> bool:
        if vacuous:
            self.vacuous += 1
        elif ok:
            self.passed += 1
        else:
            self.failed += 1
        return ok or vacuous

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_document(self) -> dict:
        doc = {
            "name": self.name,
            "status": "pass" if self.ok else "fail",
            "passed": self.passed,
            "failed": self.failed,
            "vacuous": self.vacuous,
        }
        if self.details:
            doc["details"] = self.details
        return doc


@dataclass
class Report:
    command: str
    checks: list[Check] = field(default_factory=list)
    counterexample: dict | None = None
    seed: int | None = None

    def check(self, name: str) -> Check:
        """Get or create the check called ``name``."""
        for c in self.checks:
            if c.name == name:
                return c
        c = Check(name)
        self.checks.append(c)
        return c

    def fail(self, check: Check, witness: dict) -> None:
        """Record a failure of ``check`` with its witness (first one kept)."""
        check.failed += 1
        if self.counterexample is None:
            self.counterexample = {"check": check.name, **witness}

    def expect(self, name: str, ok: bool, witness, vacuous: bool = False) -> bool:
        """Record one instance of ``name``; ``witness`` may be a callable."""
        c = self.check(name)
        if vacuous:
            c.vacuous += 1
            return True
        if ok:
            c.passed += 1
            return True
        self.fail(c, witness() if callable(witness) else witness)
        return False

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.ok else "fail"

    def merge(self, other: "Report") -> None:
        """Add ``other``'s counts into this report. Integer details are summed;
        differing non-integer details collapse to ``"varies"``."""
        for c in other.checks:
            mine = self.check(c.name)
            mine.passed += c.passed
            mine.failed += c.failed
            mine.vacuous += c.vacuous
            for k, v in c.details.items():
                if k not in mine.details:
                    mine.details[k] = v
                elif isinstance(v, int) and isinstance(mine.details[k], int):
                    mine.details[k] += v
                elif mine.details[k] != v:
                    mine.details[k] = "varies"
        if self.counterexample is None and other.counterexample is not None:
            self.counterexample = other.counterexample

    def to_document(self) -> dict:
        doc: dict[str, Any] = {
            "status": self.status,
            "command": self.command,
            "checks": [c.to_document() for c in self.checks],
        }
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample
        if self.seed is not None:
            doc["seed"] = self.seed
        return doc

    def to_json(self) -> str:
        return json.dumps(self.to_document(), sort_keys=True)

    def render_text(self) -> str:
        lines = [f"{self.command}: {self.status.upper()}"]
        if self.seed is not None:
            lines.append(f"  seed {self.seed}")
        width = max((len(c.name) for c in self.checks), default=0)
        for c in self.checks:
            mark = "ok  " if c.ok else "FAIL"
            lines.append(
                f"  {mark} {c.name:<{width}}  passed={c.passed} failed={c.failed} vacuous={c.vacuous}"
            )
            for k, v in c.details.items():
                lines.append(f"         {k}: {v}")
        if self.counterexample is not None:
            lines.append("  counterexample: " + json.dumps(self.counterexample, sort_keys=True))
        return "\n".join(lines)
