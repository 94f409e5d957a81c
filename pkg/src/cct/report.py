from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

from .values import format_value

PASS = "pass"
FAIL = "fail"
BUDGET = "budget_exceeded"


@dataclass
class LawReport:
    """Outcome of checking one quantified law over an instance space.

    ``counterexample`` maps instance component names to values; it is
    serialized with the canonical value printer so it can be parsed back
    and replayed.  ``detail`` holds by-products such as a recovered inverse.
    """

    law_id: str
    instances: int
    outcome: str
    counterexample: Optional[dict] = None
    estimate: Optional[int] = None
    expected: str = PASS
    detail: Any = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return self.outcome == PASS

    @property
    def as_expected(self) -> bool:
        return self.outcome == self.expected

    def status_text(self) -> str:
        if self.outcome == BUDGET:
            return "BUDGET EXCEEDED"
        word = "PASS" if self.passed else "FAIL"
        if self.expected == FAIL:
            return f"{word} (expected)" if not self.passed else f"{word} (unexpected)"
        return word

    def to_dict(self) -> dict:
        d = {
            "id": self.law_id,
            "instances": self.instances,
            "outcome": self.outcome,
            "expected": self.expected,
            "as_expected": self.as_expected,
        }
        if self.counterexample is not None:
            d["counterexample"] = {
                k: format_value(v) for k, v in sorted(self.counterexample.items())
            }
        if self.estimate is not None:
            d["estimate"] = self.estimate
        return d
