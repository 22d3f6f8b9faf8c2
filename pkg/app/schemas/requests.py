from pydantic import BaseModel, Field
from typing import Optional

# --- Request bodies for the HTTP service ---

class EvalRequest(BaseModel):
    """Evaluate one definition of an inline .ctt source."""
    source: str
    definition: str
    fuel: Optional[int] = Field(default=None, gt=0)
    trace: bool = False
    audit: Optional[int] = Field(default=None, ge=0)
    seed: Optional[int] = None
    check: bool = True

class CheckRequest(BaseModel):
    source: str

class FacesRequest(BaseModel):
    expression: str
