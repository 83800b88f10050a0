"""Machine-readable outcome records shared by the verifiers and explorers."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .setcore import IntSet, profile

DEFAULT_SEED = 0x5D5D


@dataclass
class VerificationReport:
    """Outcome of one check over an explicit finite grid.

    ``violations`` is empty exactly when the check passed.  Each violation
    entry carries the witness set literal, its re-computed profile, and the
    grid point that produced it.
    """

    check: str
    grid: str
    cases: int = 0
    violations: list = field(default_factory=list)
    elapsed_ms: int = 0
    seed: Optional[int] = None
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add_violation(self, witness: IntSet, context: str = ""):
        # witnesses are re-profiled on entry, so every report is self-checking
        self.violations.append(
            {
                "context": context,
                "set": str(witness),
                "profile": profile(witness).to_json_dict(),
            }
        )

    def to_json_dict(self, include_elapsed: bool = True) -> dict:
        out = {
            "check": self.check,
            "grid": self.grid,
            "cases": self.cases,
            "violations": self.violations,
        }
        if include_elapsed:
            out["elapsed_ms"] = self.elapsed_ms
        out["seed"] = self.seed
        out["notes"] = self.notes
        return out

    def summary_line(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.violations)} violations)"
        return (
            f"{self.check}: {status} — {self.cases} cases over {self.grid} "
            f"in {self.elapsed_ms} ms"
        )


def render_json(payload: dict) -> str:
    """Canonical JSON: compact, insertion-ordered keys, integers only."""
    return json.dumps(payload, separators=(",", ":"))
