from fastapi import HTTPException

from app.core.config import Settings, settings
from app.core.errors import KernelError, http_status


def get_settings() -> Settings:
    """Settings dependency; tests override it to shrink fuel and sample counts."""
    return settings


def kernel_http_error(exc: KernelError) -> HTTPException:
    """
    Translate a kernel error into an HTTPException.

    The detail mirrors the Diagnostic record so clients see the error class
    and, for restriction failures, the offending face.
    """
    detail = {"error_class": exc.error_class, "message": exc.message}
    face = getattr(exc, "face", None)
    if face is not None:
        detail["face"] = str(face)
    line = getattr(exc, "line", None)
    if line:
        detail["line"] = line
        detail["column"] = exc.column
    return HTTPException(status_code=http_status(exc), detail=detail)
