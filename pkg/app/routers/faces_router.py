from fastapi import APIRouter
from app.core.errors import KernelError
from app.dependencies import kernel_http_error
from app.schemas.report import FacesResult
from app.schemas.requests import FacesRequest
from app.services.faces_service import run_query

router = APIRouter(prefix="/faces", tags=["faces"])


@router.post("", response_model=FacesResult, response_model_exclude_none=True)
def faces(request: FacesRequest):
    """Normal form of a face, or the answer to `<=`, `==`, `split`, `irr`."""
    try:
        return run_query(request.expression)
    except KernelError as exc:
        raise kernel_http_error(exc)
