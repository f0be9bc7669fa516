"""Severity-tagged check results shared by the verification modules.

A check is "asserted" when the hypotheses under which the property is proved
are met by the input; otherwise the outcome is recorded as a diagnostic.
Asserted failures are the only outcomes that should fail a pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

ASSERTED_PASS = "asserted-pass"
ASSERTED_FAIL = "asserted-fail"
DIAGNOSTIC = "diagnostic"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one named check.

    passed records the computed verdict; asserted records whether the verdict
    is backed by proved hypotheses.  witness must be present when an asserted
    check fails.
    """

    name: str
    passed: bool
    asserted: bool
    details: dict = field(default_factory=dict)
    witness: Optional[Any] = None

    @property
    def severity(self) -> str:
        if not self.asserted:
            return DIAGNOSTIC
        return ASSERTED_PASS if self.passed else ASSERTED_FAIL
