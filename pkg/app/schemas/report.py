from pydantic import BaseModel, Field
from typing import List, Optional

# --- Records written by `eval`, `check` and `faces` ---

class TraceRecord(BaseModel):
    """One fired rule; `outer` differs from `rule` when the redex sits under a congruence."""
    step: int
    rule: str
    outer: str
    path: List[str] = []
    redex: Optional[str] = None

class EvalReport(BaseModel):
    """Outcome of evaluating one definition. Exactly one of numeral / witness / error is set."""
    name: str
    numeral: Optional[int] = None
    witness: Optional[str] = None
    witness_numeral: Optional[int] = None
    error_class: Optional[str] = None
    message: Optional[str] = None
    steps: int = 0
    wall_ms: float = 0.0
    trace: Optional[List[TraceRecord]] = None
    audit: Optional["AuditReport"] = None

class Diagnostic(BaseModel):
    """A checker verdict for one definition."""
    definition: str
    ok: bool
    error_class: Optional[str] = None
    face: Optional[str] = None
    message: Optional[str] = None

class ViolationRecord(BaseModel):
    substitution: str
    expected: int
    got: Optional[int] = None
    message: str = ""

class UnstableStepRecord(BaseModel):
    rule: str
    substitution: str
    message: str

class AuditReport(BaseModel):
    """Substitution coherence of eval_nat for one definition."""
    samples: int
    seed: int
    expected: Optional[int] = None
    violations: List[ViolationRecord] = Field(default_factory=list)
    stable_steps: int = 0
    unstable: List[UnstableStepRecord] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unstable

class FacesResult(BaseModel):
    """Normal form of a face expression, or the answer to a face query."""
    query: str
    kind: str
    normal_form: Optional[str] = None
    answer: Optional[str] = None

EvalReport.model_rebuild()
