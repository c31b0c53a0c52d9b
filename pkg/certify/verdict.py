# certify/verdict.py

from fractions import Fraction
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from models import VerdictPayload, VerdictStatus
from utils.rationals import format_fraction


class Verdict(BaseModel):
    """
    Outcome of one test. `details` and `certificate` hold JSON-ready values
    (rationals already formatted as "p/q").
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    test: str
    value: Fraction
    threshold: Fraction
    status: VerdictStatus
    details: Dict[str, Any] = Field(default_factory=dict)
    certificate: Optional[Dict[str, Any]] = None

    @property
    def contextual(self) -> bool:
        return self.status == VerdictStatus.CONTEXTUAL

    def to_payload(self) -> VerdictPayload:
        return VerdictPayload(
            test=self.test,
            value=format_fraction(self.value),
            threshold=format_fraction(self.threshold),
            status=self.status,
            details=self.details,
            certificate=self.certificate,
        )


def threshold_status(value: Fraction, threshold: Fraction, complete: bool) -> VerdictStatus:
    """Contextual above the threshold; below it, noncontextual only for complete tests."""
    if value > threshold:
        return VerdictStatus.CONTEXTUAL
    return VerdictStatus.NONCONTEXTUAL if complete else VerdictStatus.UNDECIDED
