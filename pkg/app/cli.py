"""
Command-line driver: `python -m app eval|check|faces`.

Exit codes: 0 ok, 1 usage / unknown definition / missing file, 2 parse or
checker rejection, 3 kernel failure (Stuck, FuelExhausted).
"""
from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from app.core.config import settings
from app.core.errors import FuelExhausted, KernelError, exit_code
from app.core.log import configure_logging, console, err_console
from app.kernel.pretty import pretty
from app.kernel.syntax import numeral
from app.schemas.report import EvalReport
from app.services.check_service import check_definitions
from app.services.eval_service import evaluate_all, evaluate_definition, load_source
from app.services.faces_service import run_query

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2
EXIT_KERNEL = 3


def _value_line(name: str, numeral_value: Optional[int], witness: Optional[str], witness_numeral: Optional[int]) -> str:
    if numeral_value is not None:
        return f"{name} = {pretty(numeral(numeral_value))} ({numeral_value})"
    line = f"{name} = witness {witness}"
    if witness_numeral is not None:
        line += f" ({witness_numeral})"
    return line


def _report_error(name: str, error: KernelError) -> None:
    err_console.print(f"{name}: {error.error_class}: {error.message}")
    if isinstance(error, FuelExhausted):
        for step in error.tail:
            err_console.print(f"  {step.step}: {step.rule.value} at /{'/'.join(step.path)}")


def _write_lines(path: str, records) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for record in records:
            fh.write(record.model_dump_json(exclude_none=True))
            fh.write("\n")


# error classes recorded on a report that count as kernel failures
_KERNEL_FAILURES = {"Stuck", "FuelExhausted"}


def _print_report(report: EvalReport) -> int:
    if report.error_class is not None:
        err_console.print(f"{report.name}: {report.error_class}: {report.message}")
        return EXIT_KERNEL if report.error_class in _KERNEL_FAILURES else EXIT_REJECTED
    console.print(_value_line(report.name, report.numeral, report.witness, report.witness_numeral))
    return EXIT_OK


def _eval_one(args: argparse.Namespace, source) -> int:
    ev, report = evaluate_definition(
        source,
        args.definition,
        fuel=args.fuel,
        trace=args.trace is not None,
        audit=args.audit,
        seed=args.seed,
        check=not args.no_check,
    )
    if args.trace is not None:
        _write_lines(args.trace, report.trace or [])
    if args.report is not None:
        _write_lines(args.report, [report])
    if ev.error is not None:
        _report_error(ev.name, ev.error)
        return exit_code(ev.error)
    console.print(_value_line(ev.name, report.numeral, report.witness, report.witness_numeral))
    if report.audit is not None:
        audit = report.audit
        console.print(
            f"audit: {audit.samples} samples, seed {audit.seed}, {len(audit.violations)} violations"
        )
        for v in audit.violations:
            console.print(f"  {v.substitution}: expected {v.expected}, got {v.got} {v.message}".rstrip())
        for s in audit.unstable:
            console.print(f"  {s.rule} not stable under {s.substitution}: {s.message}")
        if not audit.ok:
            return EXIT_KERNEL
    return EXIT_OK


def _eval_all(args: argparse.Namespace, source) -> int:
    reports = evaluate_all(source, fuel=args.fuel, jobs=args.jobs, check=not args.no_check)
    if args.report is not None:
        _write_lines(args.report, reports)
    status = EXIT_OK
    for report in reports:
        status = max(status, _print_report(report))
    return status


def cmd_eval(args: argparse.Namespace) -> int:
    source = load_source(args.file)
    if args.definition is None:
        return _eval_all(args, source)
    return _eval_one(args, source)


def cmd_check(args: argparse.Namespace) -> int:
    source = load_source(args.file)
    status = EXIT_OK
    for d in check_definitions(source, args.fuel):
        if d.ok:
            console.print(f"{d.definition}: ok")
            continue
        where = f" on {d.face}" if d.face else ""
        console.print(f"{d.definition}: {d.error_class}{where}: {d.message}")
        status = EXIT_REJECTED
    return status


def cmd_faces(args: argparse.Namespace) -> int:
    result = run_query(args.expression)
    if result.kind == "split":
        console.print(f"{result.normal_form}: {result.answer}")
    elif result.kind == "irr":
        console.print(result.answer)
    else:
        console.print(result.normal_form if result.answer is None else result.answer)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m app", description="Cubical canonicity kernel")
    parser.add_argument("--log-level", default=settings.LOG_LEVEL, help="logging level (default: %(default)s)")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate N- or truncation-typed definitions")
    ev.add_argument("file", help=".ctt source")
    ev.add_argument("definition", nargs="?", help="definition to evaluate (default: all)")
    ev.add_argument("--fuel", type=int, default=settings.DEFAULT_FUEL, help="step budget (default: %(default)s)")
    ev.add_argument("--trace", metavar="PATH", help="write the fired rules as JSON lines")
    ev.add_argument("--audit", type=int, metavar="S", help="check coherence under S random name substitutions")
    ev.add_argument("--seed", type=int, default=settings.AUDIT_SEED, help="audit seed (default: %(default)s)")
    ev.add_argument("--report", metavar="PATH", help="write EvalReport records as JSON lines")
    ev.add_argument("--jobs", type=int, default=settings.JOBS, help="worker threads when evaluating all definitions")
    ev.add_argument("--no-check", action="store_true", help="skip the type checker")
    ev.set_defaults(handler=cmd_eval)

    ck = sub.add_parser("check", help="type check every definition")
    ck.add_argument("file", help=".ctt source")
    ck.add_argument("--fuel", type=int, default=settings.CHECK_FUEL, help="checker step budget (default: %(default)s)")
    ck.set_defaults(handler=cmd_check)

    fc = sub.add_parser("faces", help="normalize a face or answer a face query")
    fc.add_argument("expression", help="phi | forall i. phi | phi <= psi | phi == psi | split phi psi | irr phi")
    fc.set_defaults(handler=cmd_faces)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except OSError as exc:
        err_console.print(f"error: {exc.strerror or exc}: {getattr(exc, 'filename', '') or ''}".rstrip(": "))
        return EXIT_USAGE
    except KernelError as exc:
        err_console.print(f"error: {exc.error_class}: {exc.message}")
        return exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
