"""Verification reports.

Every ``check_*`` function returns a :class:`Report` instead of raising; a
failed law is data, not an exception.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
UNKNOWN = "unknown"

DEFAULT_BUDGET = 200
DEFAULT_SEED = 0


@dataclass
class Report:
    check: str
    subject: str
    status: str = PASS
    checked: int = 0
    exhaustive: bool = False
    seed: int | None = None
    axiom: int | str | None = None
    witness: dict[str, Any] | None = None
    note: str = ""
    details: list[Report] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def fail(self, axiom, witness, note=""):
        self.status = FAIL
        self.axiom = axiom
        self.witness = witness
        if note:
            self.note = note
        return self

    def absorb(self, other: Report) -> Report:
        """Fold a sub-report into this one; the first failure wins."""
        self.details.append(other)
        self.checked += other.checked
        if self.status == PASS and other.status != PASS:
            self.status = other.status
            self.axiom = other.axiom
            self.witness = other.witness
            self.note = other.note or f"{other.check} on {other.subject}"
        return self

    def to_json(self) -> dict[str, Any]:
        out = {
            "check": self.check,
            "subject": self.subject,
            "status": self.status,
            "checked": self.checked,
            "exhaustive": self.exhaustive,
            "seed": self.seed,
            "axiom": self.axiom,
            "witness": self.witness,
            "note": self.note,
        }
        if self.details:
            out["details"] = [d.to_json() for d in self.details]
        return out

    def line(self) -> str:
        mode = "exhaustive" if self.exhaustive else f"sampled seed={self.seed}"
        s = f"[{self.status.upper():7}] {self.check} {self.subject} ({self.checked} cases, {mode})"
        if self.status != PASS:
            if self.axiom is not None:
                s += f" axiom={self.axiom}"
            if self.witness:
                s += " witness=" + ", ".join(f"{k}={v}" for k, v in self.witness.items())
            if self.note:
                s += f" -- {self.note}"
        return s

    def __str__(self):
        return self.line()
