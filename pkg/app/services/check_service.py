from typing import List, Optional

from app.core.config import settings
from app.kernel.checker import check_source
from app.kernel.source import SourceFile
from app.schemas.report import Diagnostic


def check_definitions(source: SourceFile, fuel: Optional[int] = None) -> List[Diagnostic]:
    """One Diagnostic per definition, in source order."""
    diagnostics = []
    for verdict in check_source(source, settings.CHECK_FUEL if fuel is None else fuel):
        error = verdict.error
        diagnostics.append(
            Diagnostic(
                definition=verdict.definition,
                ok=error is None,
                error_class=None if error is None else error.error_class,
                face=None if error is None or error.face is None else str(error.face),
                message=None if error is None else error.message,
            )
        )
    return diagnostics
