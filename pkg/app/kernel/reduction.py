"""
Typed, deterministic weak-head reduction over name contexts.

whnf_step decides one step: the unique reduct, Whnf for introduced terms,
or Stuck. Typing premises of the rules are trusted; every face and
interval side condition is decided on normal forms, which is exact over a
name context.
"""
from __future__ import annotations

import enum
import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Optional, Union

from app.core.errors import FuelExhausted, StuckError
from app.kernel.derived import GlueCompInputs, fill, glue_comp_parts, pred_term, ptoeq
from app.kernel.faces import F1, face_apply, face_atom, face_join_all, face_of_eq1, min_true_index
from app.kernel.interval import I0, I1, Endpoint, iv_is_end, iv_join, iv_meet, iv_name, iv_rev
from app.kernel.names import Name, NameCtx, fresh
from app.kernel.substitution import rename_name, subst_name, substitute, term_subst
from app.kernel.syntax import (
    App,
    Base,
    Branch,
    Circle,
    Comp,
    Fst,
    Fwd,
    GlueBranch,
    GlueE,
    GlueT,
    Hcomp,
    Inc,
    InhElim,
    Lam,
    Loop,
    Nat,
    Natrec,
    PAbs,
    PApp,
    Pair,
    PathT,
    Pi,
    S1Elim,
    Sigma,
    Snd,
    Squash,
    Suc,
    SystemE,
    SystemT,
    Term,
    Trunc,
    Unglue,
    Universe,
    Var,
    Zero,
)

logger = logging.getLogger(__name__)


class Rule(str, enum.Enum):
    NATREC_ZERO = "natrec-zero"
    NATREC_SUC = "natrec-suc"
    NATREC_CONG = "natrec-cong"
    BETA = "beta"
    APP_CONG = "app-cong"
    FST_PAIR = "fst-pair"
    SND_PAIR = "snd-pair"
    FST_CONG = "fst-cong"
    SND_CONG = "snd-cong"
    PATH_BETA = "path-beta"
    PAPP_CONG = "papp-cong"
    SYSTEM_SELECT = "system-select"
    GLUE_TYPE_ONE = "glue-type-one"
    GLUE_ELEM_ONE = "glue-elem-one"
    UNGLUE_ONE = "unglue-one"
    UNGLUE_GLUE = "unglue-glue"
    UNGLUE_CONG = "unglue-cong"
    COMP_TYPE_CONG = "comp-type-cong"
    COMP_NAT_ZERO = "comp-nat-zero"
    COMP_NAT_SUC = "comp-nat-suc"
    COMP_NAT_CONG = "comp-nat-cong"
    COMP_PI = "comp-pi"
    COMP_SIGMA = "comp-sigma"
    COMP_PATH = "comp-path"
    COMP_GLUE = "comp-glue"
    COMP_UNIVERSE = "comp-universe"
    COMP_CIRCLE_ONE = "comp-circle-one"
    COMP_TRUNC = "comp-trunc"
    LOOP_ENDPOINT = "loop-endpoint"
    S1ELIM_BASE = "s1elim-base"
    S1ELIM_LOOP = "s1elim-loop"
    S1ELIM_COMP = "s1elim-comp"
    S1ELIM_CONG = "s1elim-cong"
    SQUASH_ENDPOINT = "squash-endpoint"
    HCOMP_ONE = "hcomp-one"
    FWD_ONE = "fwd-one"
    FWD_INC = "fwd-inc"
    FWD_SQUASH = "fwd-squash"
    FWD_HCOMP = "fwd-hcomp"
    FWD_CONG = "fwd-cong"
    INHELIM_INC = "inhelim-inc"
    INHELIM_SQUASH = "inhelim-squash"
    INHELIM_HCOMP = "inhelim-hcomp"
    INHELIM_CONG = "inhelim-cong"


# Rules with no negated face premise and no premise referring to another
# reduction commute with every name substitution.
_SUBST_STABLE = frozenset(
    {
        Rule.NATREC_ZERO,
        Rule.NATREC_SUC,
        Rule.BETA,
        Rule.FST_PAIR,
        Rule.SND_PAIR,
        Rule.PATH_BETA,
        Rule.COMP_NAT_ZERO,
        Rule.COMP_NAT_SUC,
        Rule.COMP_PI,
        Rule.COMP_SIGMA,
        Rule.COMP_PATH,
        Rule.COMP_UNIVERSE,
        Rule.COMP_TRUNC,
        Rule.LOOP_ENDPOINT,
        Rule.S1ELIM_BASE,
        Rule.SQUASH_ENDPOINT,
        Rule.FWD_ONE,
        Rule.INHELIM_INC,
    }
)


def is_subst_stable_rule(rule: Rule) -> bool:
    return rule in _SUBST_STABLE


class StuckReason(str, enum.Enum):
    OPEN_VARIABLE = "open term variable"
    NO_RULE = "no applicable rule"
    NO_TRUE_BRANCH = "no constraint face is 1"


@dataclass(frozen=True)
class Stepped:
    """
    One step. `outer` is the rule at the root (a congruence when the redex
    is nested); `rule`, `path`, `redex` and `contractum` describe the redex.
    """

    term: Term
    rule: Rule
    outer: Rule
    path: tuple[str, ...] = ()
    redex: Optional[Term] = None
    contractum: Optional[Term] = None


@dataclass(frozen=True)
class Whnf:
    head: str


@dataclass(frozen=True)
class Stuck:
    reason: StuckReason
    term: Term


StepResult = Union[Stepped, Whnf, Stuck]


def _none_true(branches) -> bool:
    return min_true_index(branches) is None


def is_introduced(ctx: NameCtx, t: Term) -> bool:
    """Whether t's outer form is an introduction under the side conditions."""
    match t:
        case (
            Nat() | Zero() | Suc() | Pi() | Lam() | Sigma() | Pair() | PathT() | PAbs() | Universe()
            | Circle() | Base() | Trunc() | Inc()
        ):
            return True
        case GlueT(bs, _) | GlueE(bs, _):
            return _none_true(bs)
        case Loop(r) | Squash(_, _, r):
            return iv_is_end(r) is Endpoint.NEITHER
        case Comp(_, line, bs, _):
            return isinstance(line, Circle) and _none_true(bs)
        case Hcomp(_, _, bs, _):
            return _none_true(bs)
        case SystemT(bs) | SystemE(bs):
            # never over a name context: a total join has a face that is 1
            return face_join_all(b.face for b in bs) == F1 and _none_true(bs)
    return False


def _head(t: Term) -> str:
    return type(t).__name__


def _fired(t: Term, rule: Rule) -> Stepped:
    return Stepped(t, rule, rule)


def _enter(ctx: NameCtx, name: Name) -> Name:
    """A name for a binder opened over ctx."""
    return fresh(name) if name in ctx else name


def _cong(ctx: NameCtx, t: Term, sub: Term, rebuild: Callable[[Term], Term], rule: Rule, segment: str) -> StepResult:
    r = whnf_step(ctx, sub)
    if isinstance(r, Stepped):
        return Stepped(rebuild(r.term), r.rule, rule, (segment,) + r.path, r.redex, r.contractum)
    if isinstance(r, Whnf):
        return Stuck(StuckReason.NO_RULE, t)
    return r


def whnf_step(ctx: NameCtx, t: Term) -> StepResult:
    if is_introduced(ctx, t):
        return Whnf(_head(t))
    r = _dispatch(ctx, t)
    if isinstance(r, Stepped) and not r.path:
        return Stepped(r.term, r.rule, r.outer, (), t, r.term)
    return r


def _dispatch(ctx: NameCtx, t: Term) -> StepResult:
    match t:
        case Var():
            return Stuck(StuckReason.OPEN_VARIABLE, t)

        case Natrec(x, motive, n, z, s):
            if isinstance(n, Zero):
                return _fired(z, Rule.NATREC_ZERO)
            if isinstance(n, Suc):
                return _fired(App(App(s, n.arg), Natrec(x, motive, n.arg, z, s)), Rule.NATREC_SUC)
            return _cong(ctx, t, n, lambda n2: Natrec(x, motive, n2, z, s), Rule.NATREC_CONG, "scrutinee")

        case App(f, a):
            if isinstance(f, Lam):
                return _fired(term_subst(f.body, f.var, a), Rule.BETA)
            return _cong(ctx, t, f, lambda f2: App(f2, a), Rule.APP_CONG, "fun")

        case Fst(p):
            if isinstance(p, Pair):
                return _fired(p.left, Rule.FST_PAIR)
            return _cong(ctx, t, p, Fst, Rule.FST_CONG, "pair")

        case Snd(p):
            if isinstance(p, Pair):
                return _fired(p.right, Rule.SND_PAIR)
            return _cong(ctx, t, p, Snd, Rule.SND_CONG, "pair")

        case PApp(p, r):
            if isinstance(p, PAbs):
                return _fired(subst_name(p.body, p.name, r), Rule.PATH_BETA)
            return _cong(ctx, t, p, lambda p2: PApp(p2, r), Rule.PAPP_CONG, "path")

        case SystemT(bs) | SystemE(bs):
            k = min_true_index(bs)
            if k is None:
                return Stuck(StuckReason.NO_TRUE_BRANCH, t)
            return _fired(bs[k].term, Rule.SYSTEM_SELECT)

        case GlueT(bs, _):
            return _fired(bs[min_true_index(bs)].ty, Rule.GLUE_TYPE_ONE)

        case GlueE(bs, _):
            return _fired(bs[min_true_index(bs)].term, Rule.GLUE_ELEM_ONE)

        case Unglue(bs, u):
            k = min_true_index(bs)
            if k is not None:
                return _fired(App(Fst(bs[k].term), u), Rule.UNGLUE_ONE)
            if isinstance(u, GlueE) and is_introduced(ctx, u):
                return _fired(u.base, Rule.UNGLUE_GLUE)
            return _cong(ctx, t, u, lambda u2: Unglue(bs, u2), Rule.UNGLUE_CONG, "arg")

        case Comp():
            return _step_comp(ctx, t)

        case Loop(_):
            return _fired(Base(), Rule.LOOP_ENDPOINT)

        case S1Elim():
            return _step_s1elim(ctx, t)

        case Squash(u, v, r):
            return _fired(u if iv_is_end(r) is Endpoint.IS0 else v, Rule.SQUASH_ENDPOINT)

        case Hcomp(_, i, bs, _):
            return _fired(subst_name(bs[min_true_index(bs)].term, i, I1), Rule.HCOMP_ONE)

        case Fwd():
            return _step_fwd(ctx, t)

        case InhElim():
            return _step_inhelim(ctx, t)

    return Stuck(StuckReason.NO_RULE, t)


# -- composition ------------------------------------------------------------


def _step_comp(ctx: NameCtx, t: Comp) -> StepResult:
    i = _enter(ctx, t.name)
    if i != t.name:
        t = Comp(i, rename_name(t.line, t.name, i), tuple(Branch(b.face, rename_name(b.term, t.name, i)) for b in t.branches), t.base)
    line, bs, u0 = t.line, t.branches, t.base

    r = whnf_step(ctx.extend(i), line)
    if isinstance(r, Stuck):
        return r
    if isinstance(r, Stepped):
        return Stepped(Comp(i, r.term, bs, u0), r.rule, Rule.COMP_TYPE_CONG, ("line",) + r.path, r.redex, r.contractum)

    match line:
        case Nat():
            if isinstance(u0, Zero):
                return _fired(Zero(), Rule.COMP_NAT_ZERO)
            if isinstance(u0, Suc):
                pred = pred_term()
                lowered = tuple(Branch(b.face, App(pred, b.term)) for b in bs)
                return _fired(Suc(Comp(i, Nat(), lowered, u0.arg)), Rule.COMP_NAT_SUC)
            return _cong(ctx, t, u0, lambda u2: Comp(i, line, bs, u2), Rule.COMP_NAT_CONG, "base")

        case Pi(x, dom, cod):
            y = fresh("y")
            reverse = {i: iv_rev(iv_name(i))}
            y_back = fill(i, substitute(dom, reverse), (), Var(y))
            y_bar = substitute(y_back, reverse)
            body = Comp(
                i,
                term_subst(cod, x, y_bar),
                tuple(Branch(b.face, App(b.term, y_bar)) for b in bs),
                App(u0, subst_name(y_bar, i, I0)),
            )
            return _fired(Lam(y, subst_name(dom, i, I1), body), Rule.COMP_PI)

        case Sigma(x, dom, cod):
            v = fill(i, dom, tuple(Branch(b.face, Fst(b.term)) for b in bs), Fst(u0))
            second = Comp(i, term_subst(cod, x, v), tuple(Branch(b.face, Snd(b.term)) for b in bs), Snd(u0))
            return _fired(Pair(subst_name(v, i, I1), second), Rule.COMP_SIGMA)

        case PathT(k, inner, left, right):
            k2 = fresh(k)
            point = iv_name(k2)
            constraints = (Branch(face_atom(k2, 0), left), Branch(face_atom(k2, 1), right))
            constraints += tuple(Branch(b.face, PApp(b.term, point)) for b in bs)
            return _fired(PAbs(k2, Comp(i, rename_name(inner, k, k2), constraints, PApp(u0, point))), Rule.COMP_PATH)

        case GlueT(gbs, base_line):
            inputs = GlueCompInputs(i, gbs, base_line, bs, u0)
            t1, a1 = glue_comp_parts(inputs)
            phi1 = face_apply(inputs.face, {i: I1})
            return _fired(GlueE((Branch(phi1, t1),), a1), Rule.COMP_GLUE)

        case Universe():
            reverse = {i: iv_rev(iv_name(i))}
            glue = tuple(
                GlueBranch(b.face, subst_name(b.term, i, I1), ptoeq(i, substitute(b.term, reverse))) for b in bs
            )
            return _fired(GlueT(glue, u0), Rule.COMP_UNIVERSE)

        case Circle():
            k = min_true_index(bs)
            if k is None:
                return Whnf(_head(t))
            return _fired(subst_name(bs[k].term, i, I1), Rule.COMP_CIRCLE_ONE)

        case Trunc(inner):
            j = fresh("j")
            lifted = tuple(Branch(b.face, Fwd(j, rename_name(inner, i, j), iv_name(i), b.term)) for b in bs)
            return _fired(Hcomp(subst_name(inner, i, I1), i, lifted, Fwd(i, inner, I0, u0)), Rule.COMP_TRUNC)

    return Stuck(StuckReason.NO_RULE, t)


# -- circle -----------------------------------------------------------------


def _step_s1elim(ctx: NameCtx, t: S1Elim) -> StepResult:
    x, motive, s, b, l = t.var, t.motive, t.scrutinee, t.base_case, t.loop_case
    r = whnf_step(ctx, s)
    if isinstance(r, Stepped):
        return Stepped(S1Elim(x, motive, r.term, b, l), r.rule, Rule.S1ELIM_CONG, ("scrutinee",) + r.path, r.redex, r.contractum)
    if isinstance(r, Stuck):
        return r
    match s:
        case Base():
            return _fired(b, Rule.S1ELIM_BASE)
        case Loop(point):
            return _fired(PApp(l, point), Rule.S1ELIM_LOOP)
        case Comp(name, Circle(), bs, u0):
            i = fresh(name)
            bs = tuple(Branch(c.face, rename_name(c.term, name, i)) for c in bs)
            v = fill(i, Circle(), bs, u0)
            elim = tuple(Branch(c.face, S1Elim(x, motive, c.term, b, l)) for c in bs)
            return _fired(Comp(i, term_subst(motive, x, v), elim, S1Elim(x, motive, u0, b, l)), Rule.S1ELIM_COMP)
    return Stuck(StuckReason.NO_RULE, t)


# -- truncation -------------------------------------------------------------


def _step_fwd(ctx: NameCtx, t: Fwd) -> StepResult:
    i, line, r, u = t.name, t.line, t.point, t.arg
    if iv_is_end(r) is Endpoint.IS1:
        return _fired(u, Rule.FWD_ONE)
    res = whnf_step(ctx, u)
    if isinstance(res, Stepped):
        return Stepped(Fwd(i, line, r, res.term), res.rule, Rule.FWD_CONG, ("arg",) + res.path, res.redex, res.contractum)
    if isinstance(res, Stuck):
        return res
    match u:
        case Inc(a):
            k = fresh("k")
            widened = substitute(line, {i: iv_join(iv_name(k), r)})
            return _fired(Inc(Comp(k, widened, (Branch(face_of_eq1(r), a),), a)), Rule.FWD_INC)
        case Squash(left, right, s):
            return _fired(Squash(Fwd(i, line, r, left), Fwd(i, line, r, right), s), Rule.FWD_SQUASH)
        case Hcomp(_, j, bs, u0):
            j2 = fresh(j)
            moved = tuple(Branch(b.face, Fwd(i, line, r, rename_name(b.term, j, j2))) for b in bs)
            return _fired(Hcomp(subst_name(line, i, I1), j2, moved, Fwd(i, line, r, u0)), Rule.FWD_HCOMP)
    return Stuck(StuckReason.NO_RULE, t)


def _step_inhelim(ctx: NameCtx, t: InhElim) -> StepResult:
    z, motive, w, inc_case, squash_case = t.var, t.motive, t.scrutinee, t.inc_case, t.squash_case

    def elim(scrutinee: Term) -> InhElim:
        return InhElim(z, motive, scrutinee, inc_case, squash_case)

    res = whnf_step(ctx, w)
    if isinstance(res, Stepped):
        return Stepped(elim(res.term), res.rule, Rule.INHELIM_CONG, ("scrutinee",) + res.path, res.redex, res.contractum)
    if isinstance(res, Stuck):
        return res
    match w:
        case Inc(a):
            return _fired(App(inc_case, a), Rule.INHELIM_INC)
        case Squash(u, v, r):
            applied = App(App(App(App(squash_case, u), v), elim(u)), elim(v))
            return _fired(PApp(applied, r), Rule.INHELIM_SQUASH)
        case Hcomp(ty, name, bs, u0):
            i, j = fresh(name), fresh("j")
            bs = tuple(Branch(b.face, rename_name(b.term, name, i)) for b in bs)
            squeeze = {i: iv_meet(iv_name(i), iv_name(j))}
            filler = Hcomp(
                ty,
                j,
                tuple(Branch(b.face, substitute(b.term, squeeze)) for b in bs) + (Branch(face_atom(i, 0), u0),),
                u0,
            )
            lifted = tuple(Branch(b.face, elim(b.term)) for b in bs)
            return _fired(Comp(i, term_subst(motive, z, filler), lifted, elim(u0)), Rule.INHELIM_HCOMP)
    return Stuck(StuckReason.NO_RULE, t)


# -- iteration --------------------------------------------------------------


@dataclass(frozen=True)
class TraceStep:
    step: int
    rule: Rule
    outer: Rule
    path: tuple[str, ...]
    redex: Optional[Term]


@dataclass
class Reducer:
    """
    A step budget shared across several whnf calls, with an optional
    full trace and a short tail of recent rules for error reports.
    """

    fuel: int
    tracing: bool = False
    steps: int = 0
    trace: list[TraceStep] = field(default_factory=list)
    tail: deque = field(default_factory=lambda: deque(maxlen=12))

    def whnf(self, ctx: NameCtx, t: Term, stuck_ok: bool = False) -> Term:
        """With stuck_ok, a stuck term is returned as a neutral instead of raising."""
        while True:
            r = whnf_step(ctx, t)
            if isinstance(r, Whnf):
                return t
            if isinstance(r, Stuck):
                if stuck_ok:
                    return t
                raise StuckError(r.reason, r.term)
            if self.steps >= self.fuel:
                raise FuelExhausted(self.steps, list(self.tail))
            self.steps += 1
            record = TraceStep(self.steps, r.rule, r.outer, r.path, r.redex)
            self.tail.append(record)
            if self.tracing:
                self.trace.append(record)
            elif logger.isEnabledFor(logging.DEBUG):
                logger.debug("step %d: %s at /%s", self.steps, r.rule.value, "/".join(r.path))
            t = r.term


def whnf(ctx: NameCtx, t: Term, fuel: int) -> Term:
    """Iterate whnf_step until Whnf; raises FuelExhausted or StuckError."""
    return Reducer(fuel).whnf(ctx, t)


# -- rule guards ------------------------------------------------------------


def _intro(ctx: NameCtx, t: Term) -> bool:
    return is_introduced(ctx, t)


def _some_true(bs) -> bool:
    return min_true_index(bs) is not None


def _comp_line(ctx: NameCtx, t: Term, kind) -> bool:
    return isinstance(t, Comp) and isinstance(t.line, kind) and _intro(ctx.extend(_enter(ctx, t.name)), t.line)


def _is_end(r, e: Endpoint) -> bool:
    return iv_is_end(r) is e


# Each guard restates a rule's premise shape without going through the
# dispatcher. For any term at most one guard holds, and none holds for an
# introduced term.
RULE_GUARDS: dict[Rule, Callable[[NameCtx, Term], bool]] = {
    Rule.NATREC_ZERO: lambda c, t: isinstance(t, Natrec) and isinstance(t.scrutinee, Zero),
    Rule.NATREC_SUC: lambda c, t: isinstance(t, Natrec) and isinstance(t.scrutinee, Suc),
    Rule.NATREC_CONG: lambda c, t: isinstance(t, Natrec) and not _intro(c, t.scrutinee),
    Rule.BETA: lambda c, t: isinstance(t, App) and isinstance(t.fun, Lam),
    Rule.APP_CONG: lambda c, t: isinstance(t, App) and not _intro(c, t.fun),
    Rule.FST_PAIR: lambda c, t: isinstance(t, Fst) and isinstance(t.pair, Pair),
    Rule.FST_CONG: lambda c, t: isinstance(t, Fst) and not _intro(c, t.pair),
    Rule.SND_PAIR: lambda c, t: isinstance(t, Snd) and isinstance(t.pair, Pair),
    Rule.SND_CONG: lambda c, t: isinstance(t, Snd) and not _intro(c, t.pair),
    Rule.PATH_BETA: lambda c, t: isinstance(t, PApp) and isinstance(t.path, PAbs),
    Rule.PAPP_CONG: lambda c, t: isinstance(t, PApp) and not _intro(c, t.path),
    Rule.SYSTEM_SELECT: lambda c, t: isinstance(t, (SystemT, SystemE)) and _some_true(t.branches),
    Rule.GLUE_TYPE_ONE: lambda c, t: isinstance(t, GlueT) and _some_true(t.branches),
    Rule.GLUE_ELEM_ONE: lambda c, t: isinstance(t, GlueE) and _some_true(t.branches),
    Rule.UNGLUE_ONE: lambda c, t: isinstance(t, Unglue) and _some_true(t.branches),
    Rule.UNGLUE_GLUE: lambda c, t: isinstance(t, Unglue)
    and not _some_true(t.branches)
    and isinstance(t.arg, GlueE)
    and _intro(c, t.arg),
    Rule.UNGLUE_CONG: lambda c, t: isinstance(t, Unglue) and not _some_true(t.branches) and not _intro(c, t.arg),
    Rule.COMP_TYPE_CONG: lambda c, t: isinstance(t, Comp) and not _intro(c.extend(_enter(c, t.name)), t.line),
    Rule.COMP_NAT_ZERO: lambda c, t: _comp_line(c, t, Nat) and isinstance(t.base, Zero),
    Rule.COMP_NAT_SUC: lambda c, t: _comp_line(c, t, Nat) and isinstance(t.base, Suc),
    Rule.COMP_NAT_CONG: lambda c, t: _comp_line(c, t, Nat) and not _intro(c, t.base),
    Rule.COMP_PI: lambda c, t: _comp_line(c, t, Pi),
    Rule.COMP_SIGMA: lambda c, t: _comp_line(c, t, Sigma),
    Rule.COMP_PATH: lambda c, t: _comp_line(c, t, PathT),
    Rule.COMP_GLUE: lambda c, t: _comp_line(c, t, GlueT),
    Rule.COMP_UNIVERSE: lambda c, t: _comp_line(c, t, Universe),
    Rule.COMP_CIRCLE_ONE: lambda c, t: _comp_line(c, t, Circle) and _some_true(t.branches),
    Rule.COMP_TRUNC: lambda c, t: _comp_line(c, t, Trunc),
    Rule.LOOP_ENDPOINT: lambda c, t: isinstance(t, Loop) and not _is_end(t.point, Endpoint.NEITHER),
    Rule.S1ELIM_BASE: lambda c, t: isinstance(t, S1Elim) and isinstance(t.scrutinee, Base),
    Rule.S1ELIM_LOOP: lambda c, t: isinstance(t, S1Elim) and isinstance(t.scrutinee, Loop) and _intro(c, t.scrutinee),
    Rule.S1ELIM_COMP: lambda c, t: isinstance(t, S1Elim)
    and isinstance(t.scrutinee, Comp)
    and isinstance(t.scrutinee.line, Circle)
    and _intro(c, t.scrutinee),
    Rule.S1ELIM_CONG: lambda c, t: isinstance(t, S1Elim) and not _intro(c, t.scrutinee),
    Rule.SQUASH_ENDPOINT: lambda c, t: isinstance(t, Squash) and not _is_end(t.point, Endpoint.NEITHER),
    Rule.HCOMP_ONE: lambda c, t: isinstance(t, Hcomp) and _some_true(t.branches),
    Rule.FWD_ONE: lambda c, t: isinstance(t, Fwd) and _is_end(t.point, Endpoint.IS1),
    Rule.FWD_INC: lambda c, t: isinstance(t, Fwd) and not _is_end(t.point, Endpoint.IS1) and isinstance(t.arg, Inc),
    Rule.FWD_SQUASH: lambda c, t: isinstance(t, Fwd)
    and not _is_end(t.point, Endpoint.IS1)
    and isinstance(t.arg, Squash)
    and _intro(c, t.arg),
    Rule.FWD_HCOMP: lambda c, t: isinstance(t, Fwd)
    and not _is_end(t.point, Endpoint.IS1)
    and isinstance(t.arg, Hcomp)
    and _intro(c, t.arg),
    Rule.FWD_CONG: lambda c, t: isinstance(t, Fwd) and not _is_end(t.point, Endpoint.IS1) and not _intro(c, t.arg),
    Rule.INHELIM_INC: lambda c, t: isinstance(t, InhElim) and isinstance(t.scrutinee, Inc),
    Rule.INHELIM_SQUASH: lambda c, t: isinstance(t, InhElim)
    and isinstance(t.scrutinee, Squash)
    and _intro(c, t.scrutinee),
    Rule.INHELIM_HCOMP: lambda c, t: isinstance(t, InhElim)
    and isinstance(t.scrutinee, Hcomp)
    and _intro(c, t.scrutinee),
    Rule.INHELIM_CONG: lambda c, t: isinstance(t, InhElim) and not _intro(c, t.scrutinee),
}


def matching_rules(ctx: NameCtx, t: Term) -> list[Rule]:
    return [rule for rule, guard in RULE_GUARDS.items() if guard(ctx, t)]
