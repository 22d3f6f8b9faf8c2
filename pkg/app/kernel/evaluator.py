"""
Canonicity as an executable procedure.

eval_nat drives weak-head reduction to a numeral; extract_witness reads a
witness out of a truncation; coherence_audit checks that evaluation
commutes with random name substitutions.
"""
from __future__ import annotations

import dataclasses
import logging
import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional, Sequence

from app.core.config import settings
from app.core.errors import FuelExhausted, KernelError, NotEvaluable, StuckError
from app.kernel.faces import face_restrictions
from app.kernel.interval import I0, I1, Interval, iv_join, iv_meet, iv_name, iv_rev
from app.kernel.names import Name, NameCtx
from app.kernel.reduction import (
    Reducer,
    Rule,
    Stepped,
    Stuck,
    StuckReason,
    TraceStep,
    Whnf,
    is_subst_stable_rule,
    whnf_step,
)
from app.kernel.substitution import NameSubst, apply, subst_name, substitute
from app.kernel.syntax import (
    Branch,
    Comp,
    Fst,
    GlueBranch,
    Hcomp,
    Inc,
    Nat,
    Pair,
    Snd,
    Squash,
    Suc,
    Term,
    Trunc,
    Zero,
    alpha_eq,
)

logger = logging.getLogger(__name__)

CORPUS_THREAD_STACK = 256 * 1024 * 1024


def eval_nat(ctx: NameCtx, u: Term, fuel: int = settings.DEFAULT_FUEL, reducer: Optional[Reducer] = None) -> int:
    """The unique n with u = suc^n 0, for u : N over ctx."""
    reducer = reducer or Reducer(fuel)
    n, t = 0, u
    while True:
        t = reducer.whnf(ctx, t)
        if isinstance(t, Zero):
            return n
        if isinstance(t, Suc):
            n += 1
            t = t.arg
            continue
        raise StuckError(StuckReason.NO_RULE, t)


def extract_witness(ctx: NameCtx, u: Term, fuel: int = settings.DEFAULT_FUEL, reducer: Optional[Reducer] = None) -> Term:
    """
    A v : A for u : ||A||.

    squash takes its left side and hcomp its base; fwd and the rest are
    left to weak-head reduction.
    """
    reducer = reducer or Reducer(fuel)
    t = u
    while True:
        t = reducer.whnf(ctx, t)
        match t:
            case Inc(a):
                return a
            case Squash(left, _, _):
                t = left
            case Hcomp(_, _, _, base):
                t = base
            case _:
                raise StuckError(StuckReason.NO_RULE, t)


def extract_exists(
    ctx: NameCtx, u: Term, fuel: int = settings.DEFAULT_FUEL, reducer: Optional[Reducer] = None
) -> tuple[Term, Term]:
    """For u : ||(x : A) * B||, a pair (a, b) with b : B[x/a]."""
    reducer = reducer or Reducer(fuel)
    w = reducer.whnf(ctx, extract_witness(ctx, u, fuel, reducer))
    if isinstance(w, Pair):
        return w.left, w.right
    return reducer.whnf(ctx, Fst(w)), reducer.whnf(ctx, Snd(w))


@dataclass
class Evaluation:
    """Outcome of evaluating one closed term; exactly one of numeral, witness, error is set."""

    name: str
    numeral: Optional[int] = None
    witness: Optional[Term] = None
    witness_numeral: Optional[int] = None
    error: Optional[KernelError] = None
    steps: int = 0
    wall_ms: float = 0.0
    trace: list[TraceStep] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.error is None


def trace_eval(ctx: NameCtx, u: Term, fuel: int = settings.DEFAULT_FUEL, name: str = "") -> Evaluation:
    """eval_nat with every fired rule recorded."""
    reducer = Reducer(fuel, tracing=True)
    started = time.perf_counter()
    n = eval_nat(ctx, u, fuel, reducer)
    return Evaluation(
        name, numeral=n, steps=reducer.steps, wall_ms=(time.perf_counter() - started) * 1000, trace=reducer.trace
    )


def evaluate(
    ctx: NameCtx, ty: Term, u: Term, name: str = "", fuel: int = settings.DEFAULT_FUEL, tracing: bool = False
) -> Evaluation:
    """
    Evaluate u : ty, picking numeral evaluation or witness extraction from
    the head of ty. Kernel failures are recorded, not raised.
    """
    reducer = Reducer(fuel, tracing=tracing)
    started = time.perf_counter()
    result = Evaluation(name)
    try:
        head = reducer.whnf(ctx, ty)
        if isinstance(head, Nat):
            result.numeral = eval_nat(ctx, u, fuel, reducer)
        elif isinstance(head, Trunc):
            result.witness = extract_witness(ctx, u, fuel, reducer)
            if isinstance(reducer.whnf(ctx, head.ty), Nat):
                result.witness_numeral = eval_nat(ctx, result.witness, fuel, reducer)
        else:
            raise NotEvaluable(f"{name or 'term'} has type {head}, neither N nor a truncation")
    except (StuckError, FuelExhausted) as exc:
        logger.warning("%s: %s", name or "term", exc.message)
        result.error = exc
    result.steps = reducer.steps
    result.trace = reducer.trace
    result.wall_ms = (time.perf_counter() - started) * 1000
    return result


# -- substitution coherence -------------------------------------------------


@dataclass(frozen=True)
class Violation:
    substitution: NameSubst
    expected: int
    got: Optional[int]
    message: str = ""


@dataclass(frozen=True)
class StabilityViolation:
    rule: Rule
    substitution: NameSubst
    redex: Term
    message: str


@dataclass
class AuditResult:
    samples: int
    seed: int
    expected: Optional[int]
    violations: list[Violation] = field(default_factory=list)
    stable_steps: int = 0
    unstable: list[StabilityViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.unstable


def _random_interval(rng: random.Random, names: Sequence[Name], depth: int = 2) -> Interval:
    choice = rng.randrange(6) if names and depth > 0 else rng.randrange(4 if names else 2)
    if choice == 0:
        return I0
    if choice == 1:
        return I1
    if choice == 2:
        return iv_name(rng.choice(names))
    if choice == 3:
        return iv_rev(iv_name(rng.choice(names)))
    combine = iv_meet if choice == 4 else iv_join
    return combine(_random_interval(rng, names, depth - 1), _random_interval(rng, names, depth - 1))


def random_substitution(rng: random.Random, ctx: NameCtx, max_names: int = settings.AUDIT_MAX_NAMES) -> NameSubst:
    """f : J -> ctx with J a random context of up to max_names fresh source names."""
    taken = {n.ident for n in ctx}
    idents = (f"k{n}" for n in range(len(taken) + max_names + 1))
    available = [Name(x) for x in idents if x not in taken]
    codomain = NameCtx(tuple(available[: rng.randint(0, max_names)]))
    images = {n: _random_interval(rng, codomain.names) for n in ctx}
    return NameSubst(ctx, codomain, images)


def stable_root_steps(ctx: NameCtx, u: Term, fuel: int = settings.DEFAULT_FUEL) -> list[tuple[Rule, Term, Term]]:
    """
    The (rule, redex, reduct) triples of eval_nat(ctx, u) fired at the root
    by a rule closed under name substitution.
    """
    found: list[tuple[Rule, Term, Term]] = []
    steps, t = 0, u
    while True:
        r = whnf_step(ctx, t)
        if isinstance(r, Whnf):
            if isinstance(t, Suc):
                t = t.arg
                continue
            if isinstance(t, Zero):
                return found
            raise StuckError(StuckReason.NO_RULE, t)
        if isinstance(r, Stuck):
            raise StuckError(r.reason, r.term)
        if steps >= fuel:
            raise FuelExhausted(steps)
        steps += 1
        if not r.path and is_subst_stable_rule(r.rule):
            found.append((r.rule, t, r.term))
        t = r.term


def stability_failure(redex: Term, reduct: Term, f: NameSubst) -> Optional[str]:
    """None when redex f steps to reduct f over the codomain of f, else what went wrong."""
    r = whnf_step(f.codomain, apply(redex, f))
    if not isinstance(r, Stepped):
        return f"no step after substitution ({type(r).__name__})"
    if not alpha_eq(r.term, apply(reduct, f)):
        return f"{r.rule.value} gave {r.term}"
    return None


def coherence_audit(
    ctx: NameCtx,
    u: Term,
    samples: int = settings.AUDIT_SAMPLES,
    seed: int = settings.AUDIT_SEED,
    fuel: int = settings.DEFAULT_FUEL,
    max_names: int = settings.AUDIT_MAX_NAMES,
) -> AuditResult:
    """
    Check eval_nat(J, u f) = eval_nat(ctx, u) for `samples` random f : J -> ctx,
    then check up to `samples` of the substitution-stable root steps of the
    evaluation against a fresh random f each.
    """
    expected = eval_nat(ctx, u, fuel)
    result = AuditResult(samples, seed, expected)
    rng = random.Random(seed)
    for _ in range(samples):
        f = random_substitution(rng, ctx, max_names)
        try:
            got = eval_nat(f.codomain, apply(u, f), fuel)
        except KernelError as exc:
            result.violations.append(Violation(f, expected, None, exc.message))
            continue
        if got != expected:
            result.violations.append(Violation(f, expected, got))
    stable = stable_root_steps(ctx, u, fuel)
    result.stable_steps = len(stable)
    for rule, redex, reduct in rng.sample(stable, min(samples, len(stable))):
        f = random_substitution(rng, ctx, max_names)
        message = stability_failure(redex, reduct, f)
        if message is not None:
            result.unstable.append(StabilityViolation(rule, f, redex, message))
    for v in result.violations:
        logger.warning("coherence violation under %s: expected %s, got %s %s", v.substitution, v.expected, v.got, v.message)
    for s in result.unstable:
        logger.warning("%s not stable under %s: %s", s.rule.value, s.substitution, s.message)
    return result


# -- premise audit ----------------------------------------------------------


@dataclass(frozen=True)
class PremiseViolation:
    comp: Comp
    face: str
    branch: int
    expected: Optional[int]
    got: Optional[int]
    message: str = ""


def _subterms(t: Term) -> Iterator[Term]:
    yield t
    for f in dataclasses.fields(t):
        value = getattr(t, f.name)
        if isinstance(value, Term):
            yield from _subterms(value)
        elif isinstance(value, tuple):
            for b in value:
                if isinstance(b, Branch):
                    yield from _subterms(b.term)
                elif isinstance(b, GlueBranch):
                    yield from _subterms(b.ty)
                    yield from _subterms(b.equiv)


def premise_audit(ctx: NameCtx, u: Term, fuel: int = settings.DEFAULT_FUEL) -> list[PremiseViolation]:
    """
    Re-check the trusted equation u_k(i0) = u0 on phi_k for every closed
    comp at N in u, by evaluation under each irreducible face of phi_k.
    """
    scope = set(ctx)
    violations: list[PremiseViolation] = []
    for t in _subterms(u):
        if not (isinstance(t, Comp) and isinstance(t.line, Nat)):
            continue
        if t.free_vars or not t.free_names <= scope:
            continue
        for k, b in enumerate(t.branches):
            start = subst_name(b.term, t.name, I0)
            for sub_ctx, f, alpha in face_restrictions(b.face, ctx):
                expected = got = None
                try:
                    expected = eval_nat(sub_ctx, substitute(t.base, f.images), fuel)
                    got = eval_nat(sub_ctx, substitute(start, f.images), fuel)
                except KernelError as exc:
                    violations.append(PremiseViolation(t, str(alpha or b.face), k, expected, got, exc.message))
                    continue
                if expected != got:
                    violations.append(PremiseViolation(t, str(alpha or b.face), k, expected, got))
    return violations


# -- batch ------------------------------------------------------------------


def eval_corpus(
    entries: Sequence[tuple[str, NameCtx, Term, Term]],
    fuel: int = settings.DEFAULT_FUEL,
    jobs: int = settings.JOBS,
) -> list[Evaluation]:
    """Evaluate (name, ctx, type, term) entries, in parallel when jobs > 1; results keep entry order."""

    def run(entry: tuple[str, NameCtx, Term, Term]) -> Evaluation:
        name, ctx, ty, term = entry
        return evaluate(ctx, ty, term, name, fuel)

    if jobs <= 1:
        return [run(e) for e in entries]
    # deep terms need more than the default thread stack
    previous = threading.stack_size(CORPUS_THREAD_STACK)
    try:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, entries))
    finally:
        threading.stack_size(previous)
