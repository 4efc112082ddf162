"""Verdict records shared by every checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Verdict(str, Enum):
    HOLDS = "holds"
    FAILS = "fails"
    HYPOTHESIS_NOT_MET = "hypothesis-not-met"
    SKIPPED_BUDGET = "skipped-budget"

    def __str__(self) -> str:
        return self.value


@dataclass
class TheoremReport:
    theorem: str
    verdict: Verdict
    details: dict[str, Any] = field(default_factory=dict)
    witness: str = ""

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.FAILS

    def summary(self) -> str:
        bits = [f"{self.theorem}: {self.verdict}"]
        if self.details:
            bits.append(" ".join(f"{k}={v}" for k, v in self.details.items()))
        if self.witness:
            bits.append(f"[{self.witness}]")
        return " ".join(bits)


def holds_if(theorem: str, ok: bool, details: dict[str, Any] | None = None, witness: str = "") -> TheoremReport:
    return TheoremReport(theorem, Verdict.HOLDS if ok else Verdict.FAILS, details or {}, witness)


def not_applicable(theorem: str, reason: str) -> TheoremReport:
    return TheoremReport(theorem, Verdict.HYPOTHESIS_NOT_MET, {"reason": reason})
