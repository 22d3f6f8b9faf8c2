from pathlib import Path
from typing import Iterable, List, Optional

from app.core.config import settings
from app.core.errors import KernelError
from app.kernel.checker import check_definition, check_source
from app.kernel.evaluator import AuditResult, Evaluation, coherence_audit, eval_corpus, evaluate
from app.kernel.parser import parse
from app.kernel.reduction import Reducer, TraceStep
from app.kernel.source import SourceFile
from app.kernel.syntax import Nat, Trunc
from app.schemas.report import AuditReport, EvalReport, TraceRecord, UnstableStepRecord, ViolationRecord


def load_source(path: str | Path) -> SourceFile:
    """Read and parse a .ctt file; OSError propagates to the caller."""
    return parse(Path(path).read_text(encoding="utf-8"))


def trace_records(trace: Iterable[TraceStep]) -> List[TraceRecord]:
    return [
        TraceRecord(
            step=s.step,
            rule=s.rule.value,
            outer=s.outer.value,
            path=list(s.path),
            redex=None if s.redex is None else str(s.redex),
        )
        for s in trace
    ]


def audit_report(result: AuditResult) -> AuditReport:
    return AuditReport(
        samples=result.samples,
        seed=result.seed,
        expected=result.expected,
        violations=[
            ViolationRecord(substitution=str(v.substitution), expected=v.expected, got=v.got, message=v.message)
            for v in result.violations
        ],
        stable_steps=result.stable_steps,
        unstable=[
            UnstableStepRecord(rule=s.rule.value, substitution=str(s.substitution), message=s.message)
            for s in result.unstable
        ],
    )


def evaluation_report(ev: Evaluation, with_trace: bool = False) -> EvalReport:
    report = EvalReport(
        name=ev.name,
        numeral=ev.numeral,
        witness=None if ev.witness is None else str(ev.witness),
        witness_numeral=ev.witness_numeral,
        steps=ev.steps,
        wall_ms=round(ev.wall_ms, 3),
        trace=trace_records(ev.trace) if with_trace else None,
    )
    if ev.error is not None:
        report.error_class = ev.error.error_class
        report.message = ev.error.message
    return report


def evaluate_definition(
    source: SourceFile,
    name: str,
    fuel: Optional[int] = None,
    trace: bool = False,
    audit: Optional[int] = None,
    seed: Optional[int] = None,
    check: bool = True,
) -> tuple[Evaluation, EvalReport]:
    """
    Check `name` (unless check is off), evaluate it, and optionally audit
    substitution coherence.

    Raises DefinitionNotFound, CheckError subclasses and NotEvaluable;
    Stuck / FuelExhausted are recorded on the returned Evaluation.
    """
    fuel = settings.DEFAULT_FUEL if fuel is None else fuel
    source.get(name)
    if check:
        check_definition(source, name, settings.CHECK_FUEL)
    ty, body = source.closed(name)
    ev = evaluate(source.names, ty, body, name, fuel, tracing=trace)
    report = evaluation_report(ev, with_trace=trace)
    if audit and ev.numeral is not None:
        result = coherence_audit(
            source.names,
            body,
            samples=audit,
            seed=settings.AUDIT_SEED if seed is None else seed,
            fuel=fuel,
        )
        report.audit = audit_report(result)
    return ev, report


def evaluable_definitions(source: SourceFile, fuel: Optional[int] = None) -> List[str]:
    """Names of the definitions whose type is N or a truncation."""
    names = []
    for d in source:
        ty, _ = source.closed(d.name)
        try:
            head = Reducer(settings.DEFAULT_FUEL if fuel is None else fuel).whnf(source.names, ty)
        except KernelError:
            continue
        if isinstance(head, (Nat, Trunc)):
            names.append(d.name)
    return names


def evaluate_all(
    source: SourceFile, fuel: Optional[int] = None, jobs: Optional[int] = None, check: bool = True
) -> List[EvalReport]:
    """Evaluate every N- or truncation-typed definition; rejected ones report their checker error."""
    fuel = settings.DEFAULT_FUEL if fuel is None else fuel
    targets = evaluable_definitions(source, fuel)
    rejected = {}
    if check:
        rejected = {v.definition: v.error for v in check_source(source, settings.CHECK_FUEL) if v.error is not None}
    entries = [(n, source.names, *source.closed(n)) for n in targets if n not in rejected]
    reports = {ev.name: evaluation_report(ev) for ev in eval_corpus(entries, fuel, jobs or settings.JOBS)}
    for name, error in rejected.items():
        if name in targets:
            reports[name] = EvalReport(name=name, error_class=error.error_class, message=error.message)
    return [reports[n] for n in targets]
