from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple
from pydantic import BaseModel
from pydantic.fields import Field

from config import Limits


class Convention(str, Enum):
    PM1 = "pm1"
    ZO = "zo"


class ViolationKind(str, Enum):
    DUPLICATE_MEASUREMENT = "duplicate_measurement"
    EMPTY_CONTEXT = "empty_context"
    DUPLICATE_IN_CONTEXT = "duplicate_in_context"
    UNKNOWN_MEASUREMENT = "unknown_measurement"
    COVER = "cover"
    ANTICHAIN = "antichain"
    OUTCOMES = "outcomes"
    MISSING_CONTEXT = "missing_context"
    EXTRA_CONTEXT = "extra_context"
    ARITY = "arity"
    UNKNOWN_OUTCOME = "unknown_outcome"
    NEGATIVE = "negative"
    NORMALIZATION = "normalization"


class Violation(BaseModel):
    kind: ViolationKind
    message: str
    subject: List[str] = Field(
        default_factory=list, description="Ids of the measurements or contexts involved"
    )


class ValidationReport(BaseModel):
    violations: List[Violation] = Field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> List[ViolationKind]:
        return [v.kind for v in self.violations]


class ScenarioPayload(BaseModel):
    measurements: List[str]
    contexts: List[List[str]]
    outcomes: List[int] = Field(default_factory=lambda: [-1, 1])


class GraphPayload(BaseModel):
    vertices: List[str]
    edges: List[Tuple[str, str]] = Field(default_factory=list)


class InequalityPayload(BaseModel):
    graph: GraphPayload
    apex: Optional[str] = Field(
        default=None, description="Apex vertex whose edges carry single-measurement terms"
    )
    convention: Convention = Convention.PM1
    coeffs: Dict[str, str] = Field(
        description="Edge key 'u|v' to exact rational coefficient 'p/q'"
    )
    bound: str
    trace: List[str] = Field(default_factory=list)


class ErrorReport(BaseModel):
    success: bool = False
    errorType: str
    errorMessage: str
    violations: List[Violation] | None = None


class Command(str, Enum):
    GENERATE = "generate"
    CHECK = "check"
    DERIVE = "derive"
    VALIDATE = "validate"


class CheckTest(str, Enum):
    NCYCLE = "ncycle"
    PM = "pm"
    INEQ = "ineq"
    ORACLE = "oracle"


class DeriveOperation(str, Enum):
    TE = "te"
    SPLIT = "split"
    CONTRACT = "contract"
    EXTEND = "extend"
    CONVERT = "convert"


class ExitCode(int, Enum):
    OK = 0
    INVALID = 2
    CONTEXTUAL = 3
    CERTIFICATE = 4


class RunConfig(BaseModel):
    command: Command
    scenario: Optional[str] = Field(
        default=None, description="Scenario JSON path or catalog selector such as 'ncycle:5'"
    )
    behavior: Optional[str] = Field(
        default=None, description="Behavior JSON path or catalog selector such as 'pr-box:4'"
    )
    inequality: Optional[str] = Field(
        default=None, description="Inequality JSON path or catalog selector such as 'i3322'"
    )
    selector: Optional[str] = Field(
        default=None, description="Catalog selector for generate"
    )
    test: Optional[CheckTest] = None
    operation: Optional[DeriveOperation] = None
    params: Dict[str, Any] = Field(default_factory=dict)
    verify: bool = False
    limits: Limits = Field(default_factory=Limits)
    out: Optional[Path] = Field(default=None, description="Output path, stdout when absent")


class VerdictStatus(str, Enum):
    CONTEXTUAL = "extended_contextual"
    UNDECIDED = "undecided"
    NONCONTEXTUAL = "extended_noncontextual"


class VerdictPayload(BaseModel):
    test: str = Field(description="Test that produced the verdict")
    value: str = Field(description="Exact left-hand side as 'p/q'")
    threshold: str = Field(description="Exact threshold as 'p/q'")
    status: VerdictStatus
    details: Dict[str, Any] = Field(default_factory=dict)
    certificate: Optional[Dict[str, Any]] = None
