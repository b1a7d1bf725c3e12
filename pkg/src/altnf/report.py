from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    """Outcome of one named check at degree ``n``.

    Serialises to ``{"check", "n", "passed", "counterexample"?, "stats"}``;
    ``counterexample`` is present only for failures.
    """

    check: str
    n: int
    passed: bool
    counterexample: Any = None
    stats: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if not self.passed and self.counterexample is None:
            raise ValueError("a failed report must carry a counterexample")

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"check": self.check, "n": self.n, "passed": self.passed}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        out["stats"] = self.stats
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False, default=str)
