"""Structured outcomes of verification checks.

A Report collects the per-identity entries produced while checking one
parameter case.  Entries flatten to the five-field records written by the
CLI (suite, case, identity, status, residual); anything richer stays in the
in-memory ``detail`` field and never reaches the report file.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List

PASS = "pass"
FAIL = "fail"
BOUNDARY = "boundary-expected"

_STATUS_RANK = {PASS: 0, BOUNDARY: 1, FAIL: 2}


@dataclass(frozen=True)
class ReportEntry:
    identity: str
    status: str
    residual: str
    detail: str = ""


@dataclass
class Report:
    suite: str
    case: str
    entries: List[ReportEntry] = field(default_factory=list)

    def add(self, identity: str, status: str, residual: str, detail: str = "") -> None:
        if status not in _STATUS_RANK:
            raise ValueError(f"unknown status {status!r}")
        self.entries.append(ReportEntry(identity, status, residual, detail))

    @property
    def status(self) -> str:
        worst = PASS
        for e in self.entries:
            if _STATUS_RANK[e.status] > _STATUS_RANK[worst]:
                worst = e.status
        return worst

    @property
    def passed(self) -> bool:
        return all(e.status != FAIL for e in self.entries)

    def failures(self) -> List[ReportEntry]:
        return [e for e in self.entries if e.status == FAIL]

    def records(self) -> List[Dict[str, str]]:
        """Flat records in the CLI wire schema, one per entry."""
        return [
            {
                "suite": self.suite,
                "case": self.case,
                "identity": e.identity,
                "status": e.status,
                "residual": e.residual,
            }
            for e in self.entries
        ]

    def __str__(self) -> str:
        lines = [f"[{self.status}] {self.suite} :: {self.case}"]
        for e in self.entries:
            lines.append(f"  {e.status:<18} {e.identity}: residual={e.residual}")
            if e.detail:
                lines.append(f"                     {e.detail}")
        return "\n".join(lines)
