from fastapi import APIRouter, Depends, UploadFile
from app.core.config import Settings
from app.core.errors import KernelError
from app.core.validators import read_upload, validate_definition_name
from app.dependencies import get_settings, kernel_http_error
from app.kernel.parser import parse
from app.schemas.report import EvalReport
from app.schemas.requests import EvalRequest
from app.services.eval_service import evaluate_definition

router = APIRouter(prefix="/eval", tags=["eval"])


def _run(text: str, definition: str, fuel, trace: bool, audit, seed, check: bool, config: Settings) -> EvalReport:
    try:
        source = parse(text)
        ev, report = evaluate_definition(
            source,
            definition,
            fuel=config.DEFAULT_FUEL if fuel is None else fuel,
            trace=trace,
            audit=audit,
            seed=seed,
            check=check,
        )
    except KernelError as exc:
        raise kernel_http_error(exc)
    if ev.error is not None:
        raise kernel_http_error(ev.error)
    return report


@router.post("", response_model=EvalReport, response_model_exclude_none=True)
def eval_inline(request: EvalRequest, config: Settings = Depends(get_settings)):
    """
    Evaluate one definition of an inline source.

    N-typed definitions answer with `numeral`; truncation-typed ones with
    `witness` (and `witness_numeral` when the witness is a natural).

    curl -X POST http://localhost:8000/eval \\
         -H 'Content-Type: application/json' \\
         -d '{"source": "two : N = suc (suc Z)", "definition": "two"}'
    """
    validate_definition_name(request.definition)
    return _run(
        request.source,
        request.definition,
        request.fuel,
        request.trace,
        request.audit,
        request.seed,
        request.check,
        config,
    )


@router.post("/upload", response_model=EvalReport, response_model_exclude_none=True)
def eval_upload(
    file: UploadFile,
    definition: str,
    fuel: int | None = None,
    trace: bool = False,
    audit: int | None = None,
    seed: int | None = None,
    config: Settings = Depends(get_settings),
):
    """
    Evaluate a definition of an uploaded .ctt file.

    curl -X POST "http://localhost:8000/eval/upload?definition=two" \\
         -F "file=@corpus/corpus.ctt"
    """
    validate_definition_name(definition)
    text = read_upload(file)
    return _run(text, definition, fuel, trace, audit, seed, True, config)
