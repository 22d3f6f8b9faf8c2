from fastapi import APIRouter, Depends
from app.core.config import Settings
from app.core.errors import KernelError
from app.dependencies import get_settings, kernel_http_error
from app.kernel.parser import parse
from app.schemas.report import Diagnostic
from app.schemas.requests import CheckRequest
from app.services.check_service import check_definitions

router = APIRouter(prefix="/check", tags=["check"])


@router.post("", response_model=list[Diagnostic], response_model_exclude_none=True)
def check(request: CheckRequest, config: Settings = Depends(get_settings)):
    """
    Check every definition of a source. Rejections are reported per
    definition with status 200; only a parse error fails the request.
    """
    try:
        source = parse(request.source)
    except KernelError as exc:
        raise kernel_http_error(exc)
    return check_definitions(source, config.CHECK_FUEL)
