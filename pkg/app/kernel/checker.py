"""
A bidirectional type checker for closed definitions over name contexts.

Conversion is weak-head comparison with eta for functions, pairs and
paths; it is sound and incomplete, and running out of fuel is reported as
CheckerIncomplete rather than as acceptance. A restriction in the context
is never stored: checking "on phi" means checking in I_alpha after
substituting alpha-bar, for each irreducible alpha <= phi.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional, Sequence

from app.core.config import settings
from app.core.errors import (
    CannotSynthesize,
    CheckError,
    CheckerIncomplete,
    FaceError,
    FuelExhausted,
    Mismatch,
    RestrictionUnsatisfied,
    SubstitutionError,
    UnboundVariable,
)
from app.kernel.derived import equiv_type
from app.kernel.faces import F1, Face, face_apply, face_join_all, face_meet, face_restrictions, min_true_index
from app.kernel.interval import I0, I1, Endpoint, Interval, iv_eq, iv_is_end, iv_name
from app.kernel.names import Name, NameCtx, fresh
from app.kernel.reduction import Reducer, is_introduced
from app.kernel.source import SourceFile
from app.kernel.substitution import NameSubst, rename_name, subst_name, substitute, term_subst
from app.kernel.syntax import (
    App,
    Base,
    Branch,
    Circle,
    Comp,
    Fst,
    Fwd,
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
    alpha_eq,
    arrow,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Ctx:
    """Interval names in scope, typed variables, and the values of definitions."""

    names: NameCtx = NameCtx()
    vars: tuple[tuple[Name, Term], ...] = ()
    defs: Mapping[Name, Term] = field(default_factory=dict)

    def lookup(self, x: Name) -> Optional[Term]:
        for y, ty in reversed(self.vars):
            if y == x:
                return ty
        return None

    def binds(self, x: Name) -> bool:
        return any(y == x for y, _ in self.vars)

    def bind(self, x: Name, ty: Term) -> "Ctx":
        return Ctx(self.names, self.vars + ((x, ty),), self.defs)

    def define(self, x: Name, ty: Term, value: Term) -> "Ctx":
        return Ctx(self.names, self.vars + ((x, ty),), {**self.defs, x: value})

    def with_name(self, i: Name) -> "Ctx":
        return Ctx(self.names.extend(i), self.vars, self.defs)

    def restrict(self, f: NameSubst) -> "Ctx":
        """The context over f's codomain, every type and value moved along f."""
        images = f.images
        return Ctx(
            f.codomain,
            tuple((x, substitute(ty, images)) for x, ty in self.vars),
            {x: substitute(v, images) for x, v in self.defs.items()},
        )


def _show(t: Term) -> str:
    return str(t)


class Checker:
    def __init__(self, fuel: int = settings.CHECK_FUEL):
        self.reducer = Reducer(fuel)

    # -- reduction --------------------------------------------------------

    def whnf(self, ctx: Ctx, t: Term) -> Term:
        """Weak-head form; stuck terms come back as neutrals after unfolding definitions."""
        while True:
            try:
                t = self.reducer.whnf(ctx.names, t, stuck_ok=True)
            except FuelExhausted as exc:
                raise CheckerIncomplete(f"checker ran out of fuel after {exc.steps} steps") from exc
            except RecursionError as exc:
                raise CheckerIncomplete("term too deep for the checker") from exc
            if is_introduced(ctx.names, t):
                return t
            unfold = {x: v for x, v in ctx.defs.items() if x in t.free_vars}
            if unfold:
                t = substitute(t, vars_=unfold)
                continue
            endpoint = self._endpoint(ctx, t)
            if endpoint is None:
                return t
            t = endpoint

    def _endpoint(self, ctx: Ctx, t: Term) -> Optional[Term]:
        """Rewrite a neutral p @ 0 or p @ 1 at the head of t to the endpoint of p's type."""
        match t:
            case PApp(p, r) if iv_is_end(r) is not Endpoint.NEITHER:
                try:
                    ty = self.whnf(ctx, self.infer(ctx, p))
                except CheckError:
                    return None
                if isinstance(ty, PathT):
                    return ty.left if iv_is_end(r) is Endpoint.IS0 else ty.right
                return None
            case PApp(p, r):
                inner = self._endpoint(ctx, p)
                return None if inner is None else PApp(inner, r)
            case App(f, a):
                inner = self._endpoint(ctx, f)
                return None if inner is None else App(inner, a)
            case Fst(p):
                inner = self._endpoint(ctx, p)
                return None if inner is None else Fst(inner)
            case Snd(p):
                inner = self._endpoint(ctx, p)
                return None if inner is None else Snd(inner)
            case Natrec(x, motive, n, z, s):
                inner = self._endpoint(ctx, n)
                return None if inner is None else Natrec(x, motive, inner, z, s)
            case S1Elim(x, motive, s, b, l):
                inner = self._endpoint(ctx, s)
                return None if inner is None else S1Elim(x, motive, inner, b, l)
            case InhElim(z, motive, w, tc, pc):
                inner = self._endpoint(ctx, w)
                return None if inner is None else InhElim(z, motive, inner, tc, pc)
            case Unglue(bs, u):
                inner = self._endpoint(ctx, u)
                return None if inner is None else Unglue(bs, inner)
            case Comp(i, Nat(), bs, u0):
                inner = self._endpoint(ctx, u0)
                return None if inner is None else Comp(i, Nat(), bs, inner)
        return None

    # -- binders ----------------------------------------------------------

    @staticmethod
    def _open_var(ctx: Ctx, x: Name) -> Name:
        return fresh(x) if ctx.binds(x) or x in ctx.defs else x

    @staticmethod
    def _open_name(ctx: Ctx, i: Name) -> Name:
        return fresh(i) if i in ctx.names else i

    @staticmethod
    def _rename_var(t: Term, x: Name, y: Name) -> Term:
        return t if x == y else term_subst(t, x, Var(y))

    @staticmethod
    def _rename_name(t: Term, i: Name, j: Name) -> Term:
        return t if i == j else rename_name(t, i, j)

    # -- scope ------------------------------------------------------------

    @staticmethod
    def _scope_interval(ctx: Ctx, r: Interval) -> None:
        outside = r.names - set(ctx.names)
        if outside:
            raise UnboundVariable(f"interval name {sorted(outside)[0]} is not in scope")

    @staticmethod
    def _scope_face(ctx: Ctx, phi: Face) -> None:
        outside = phi.names - set(ctx.names)
        if outside:
            raise UnboundVariable(f"face mentions {sorted(outside)[0]}, which is not in scope")

    def _restrictions(self, ctx: Ctx, phi: Face):
        """(restricted ctx, substitution, alpha) per irreducible alpha <= phi."""
        for _, f, alpha in face_restrictions(phi, ctx.names):
            yield ctx.restrict(f), f, alpha

    # -- conversion -------------------------------------------------------

    def convert(self, ctx: Ctx, a: Term, b: Term) -> bool:
        if alpha_eq(a, b):
            return True
        a, b = self.whnf(ctx, a), self.whnf(ctx, b)
        if alpha_eq(a, b):
            return True
        return self._convert_whnf(ctx, a, b)

    def _convert_under(self, ctx: Ctx, phi: Face, a: Term, b: Term, bound: Optional[Name] = None) -> bool:
        for sub, f, _ in self._restrictions(ctx, phi):
            if bound is not None:
                sub = sub.with_name(bound)
            if not self.convert(sub, substitute(a, f.images), substitute(b, f.images)):
                return False
        return True

    def _convert_branches(self, ctx: Ctx, bs1, bs2, bound: Optional[Name] = None) -> bool:
        return len(bs1) == len(bs2) and all(
            b1.face == b2.face and self._convert_under(ctx, b1.face, b1.term, b2.term, bound)
            for b1, b2 in zip(bs1, bs2)
        )

    def _convert_whnf(self, ctx: Ctx, a: Term, b: Term) -> bool:
        if isinstance(a, Lam) or isinstance(b, Lam):
            lam = a if isinstance(a, Lam) else b
            x = fresh(lam.var)
            return self.convert(ctx.bind(x, lam.dom), App(a, Var(x)), App(b, Var(x)))
        if isinstance(a, PAbs) or isinstance(b, PAbs):
            k = fresh((a if isinstance(a, PAbs) else b).name)
            return self.convert(ctx.with_name(k), PApp(a, iv_name(k)), PApp(b, iv_name(k)))
        if isinstance(a, Pair) or isinstance(b, Pair):
            return self.convert(ctx, Fst(a), Fst(b)) and self.convert(ctx, Snd(a), Snd(b))
        if type(a) is not type(b):
            return False

        match a:
            case Nat() | Zero() | Universe() | Circle() | Base():
                return True
            case Var(x):
                return x == b.name
            case Suc(u) | Inc(u):
                return self.convert(ctx, u, b.arg)
            case Trunc(u):
                return self.convert(ctx, u, b.ty)
            case Fst(p) | Snd(p):
                return self.convert(ctx, p, b.pair)
            case App(f, u):
                return self.convert(ctx, f, b.fun) and self.convert(ctx, u, b.arg)
            case Pi(x, dom, cod) | Sigma(x, dom, cod):
                if not self.convert(ctx, dom, b.dom):
                    return False
                y = fresh(x)
                return self.convert(ctx.bind(y, dom), term_subst(cod, x, Var(y)), term_subst(b.cod, b.var, Var(y)))
            case PathT(i, line, left, right):
                k = fresh(i)
                return (
                    self.convert(ctx.with_name(k), rename_name(line, i, k), rename_name(b.line, b.name, k))
                    and self.convert(ctx, left, b.left)
                    and self.convert(ctx, right, b.right)
                )
            case PApp(p, r):
                return iv_eq(r, b.point) and self.convert(ctx, p, b.path)
            case Loop(r):
                return iv_eq(r, b.point)
            case Squash(u, v, r):
                return iv_eq(r, b.point) and self.convert(ctx, u, b.left) and self.convert(ctx, v, b.right)
            case Natrec(x, motive, n, z, s):
                return self._convert_elim(ctx, a, b, Nat()) and self.convert(ctx, z, b.zero) and self.convert(ctx, s, b.succ)
            case S1Elim(x, motive, s, base, loop):
                return (
                    self._convert_elim(ctx, a, b, Circle())
                    and self.convert(ctx, base, b.base_case)
                    and self.convert(ctx, loop, b.loop_case)
                )
            case InhElim(z, motive, w, tc, pc):
                try:
                    ty = self.infer(ctx, w)
                except CheckError:
                    ty = Trunc(Universe())
                return (
                    self._convert_elim(ctx, a, b, ty)
                    and self.convert(ctx, tc, b.inc_case)
                    and self.convert(ctx, pc, b.squash_case)
                )
            case SystemT(bs) | SystemE(bs):
                return self._convert_branches(ctx, bs, b.branches)
            case GlueT(gbs, base):
                return (
                    len(gbs) == len(b.branches)
                    and all(
                        g1.face == g2.face
                        and self._convert_under(ctx, g1.face, g1.ty, g2.ty)
                        and self._convert_under(ctx, g1.face, g1.equiv, g2.equiv)
                        for g1, g2 in zip(gbs, b.branches)
                    )
                    and self.convert(ctx, base, b.base)
                )
            case GlueE(bs, base):
                return self._convert_branches(ctx, bs, b.branches) and self.convert(ctx, base, b.base)
            case Unglue(bs, u):
                return self._convert_branches(ctx, bs, b.branches) and self.convert(ctx, u, b.arg)
            case Comp(i, line, bs, u0):
                k = fresh(i)
                return (
                    self.convert(ctx.with_name(k), rename_name(line, i, k), rename_name(b.line, b.name, k))
                    and self._convert_branches(ctx, _rename_branches(bs, i, k), _rename_branches(b.branches, b.name, k), k)
                    and self.convert(ctx, u0, b.base)
                )
            case Hcomp(ty, i, bs, u0):
                k = fresh(i)
                return (
                    self.convert(ctx, ty, b.ty)
                    and self._convert_branches(ctx, _rename_branches(bs, i, k), _rename_branches(b.branches, b.name, k), k)
                    and self.convert(ctx, u0, b.base)
                )
            case Fwd(i, line, r, u):
                k = fresh(i)
                return (
                    iv_eq(r, b.point)
                    and self.convert(ctx.with_name(k), rename_name(line, i, k), rename_name(b.line, b.name, k))
                    and self.convert(ctx, u, b.arg)
                )
        return False

    def _convert_elim(self, ctx: Ctx, a, b, scrutinee_ty: Term) -> bool:
        y = fresh(a.var)
        return self.convert(ctx, a.scrutinee, b.scrutinee) and self.convert(
            ctx.bind(y, scrutinee_ty), term_subst(a.motive, a.var, Var(y)), term_subst(b.motive, b.var, Var(y))
        )

    def check_restriction(self, ctx: Ctx, phi: Face, t: Term, u: Term, what: str = "terms") -> None:
        """t = u on phi, decided per irreducible face."""
        for sub, f, alpha in self._restrictions(ctx, phi):
            if not self.convert(sub, substitute(t, f.images), substitute(u, f.images)):
                where = alpha.face if alpha is not None else F1
                raise RestrictionUnsatisfied(f"{what} disagree on {where}", face=where)

    # -- checking ---------------------------------------------------------

    def check_type(self, ctx: Ctx, ty: Term) -> None:
        self.check(ctx, ty, Universe())

    def _expect(self, ctx: Ctx, ty: Term, kind: type, what: str) -> Term:
        head = self.whnf(ctx, ty)
        if not isinstance(head, kind):
            raise Mismatch(what, head, f"expected {what}, got {_show(head)}")
        return head

    def check(self, ctx: Ctx, t: Term, ty: Term) -> None:
        match t:
            case Lam(x, dom, body):
                pi = self._expect(ctx, ty, Pi, "a function type")
                self.check_type(ctx, dom)
                if not self.convert(ctx, dom, pi.dom):
                    raise Mismatch(pi.dom, dom, f"lambda domain {_show(dom)} does not match {_show(pi.dom)}")
                y = self._open_var(ctx, x)
                self.check(ctx.bind(y, dom), self._rename_var(body, x, y), self._rename_var(pi.cod, pi.var, y))
                return
            case Pair(u, v):
                sigma = self._expect(ctx, ty, Sigma, "a pair type")
                self.check(ctx, u, sigma.dom)
                self.check(ctx, v, term_subst(sigma.cod, sigma.var, u))
                return
            case PAbs(i, body):
                p = self._expect(ctx, ty, PathT, "a path type")
                k = self._open_name(ctx, i)
                self.check(ctx.with_name(k), self._rename_name(body, i, k), self._rename_name(p.line, p.name, k))
                for end, target, label in ((I0, p.left, "start"), (I1, p.right, "end")):
                    got = subst_name(body, i, end)
                    if not self.convert(ctx, got, target):
                        raise Mismatch(target, got, f"path {label}s at {_show(got)}, expected {_show(target)}")
                return
            case SystemE(bs):
                self._check_system(ctx, bs, lambda sub, f, u: self.check(sub, u, substitute(ty, f.images)))
                return
            case GlueE(bs, a) if min_true_index(bs) is None:
                self._check_glue(ctx, bs, a, ty)
                return
        got = self.infer(ctx, t)
        if not self.convert(ctx, got, ty):
            raise Mismatch(ty, got, f"{_show(t)} has type {_show(got)}, expected {_show(ty)}")

    def _check_system(self, ctx: Ctx, bs, check_branch: Callable[[Ctx, NameSubst, Term], None]) -> None:
        for b in bs:
            self._scope_face(ctx, b.face)
        cover = face_join_all(b.face for b in bs)
        if cover != F1:
            raise RestrictionUnsatisfied(f"system faces cover only {cover}", face=cover)
        for b in bs:
            for sub, f, _ in self._restrictions(ctx, b.face):
                check_branch(sub, f, substitute(b.term, f.images))
        self._check_compatible(ctx, bs)

    def _check_compatible(self, ctx: Ctx, bs: Sequence[Branch], bound: Optional[Name] = None) -> None:
        for k, b1 in enumerate(bs):
            for b2 in bs[k + 1 :]:
                overlap = face_meet(b1.face, b2.face)
                for sub, f, alpha in self._restrictions(ctx, overlap):
                    if bound is not None:
                        sub = sub.with_name(bound)
                    if not self.convert(sub, substitute(b1.term, f.images), substitute(b2.term, f.images)):
                        where = alpha.face if alpha is not None else F1
                        raise RestrictionUnsatisfied(f"constraints disagree on {where}", face=where)

    def _check_glue(self, ctx: Ctx, bs, a: Term, ty: Term) -> None:
        glue = self._expect(ctx, ty, GlueT, "a Glue type")
        self.check(ctx, a, glue.base)
        for b in bs:
            self._scope_face(ctx, b.face)
        phi = face_join_all(g.face for g in glue.branches)
        got = face_join_all(b.face for b in bs)
        if got != phi:
            raise RestrictionUnsatisfied(f"glue is given on {got} but its type glues on {phi}", face=got)
        for b in bs:
            for sub, f, alpha in self._restrictions(ctx, b.face):
                k = min_true_index([(face_apply(g.face, f.images),) for g in glue.branches])
                if k is None:
                    raise CheckerIncomplete(f"no Glue branch holds on {alpha}")
                g = glue.branches[k]
                t_a = substitute(b.term, f.images)
                self.check(sub, t_a, substitute(g.ty, f.images))
                image = App(Fst(substitute(g.equiv, f.images)), t_a)
                if not self.convert(sub, substitute(a, f.images), image):
                    where = alpha.face if alpha is not None else F1
                    raise RestrictionUnsatisfied(f"glue base is not the image of its partial element on {where}", face=where)
        self._check_compatible(ctx, bs)

    # -- inference --------------------------------------------------------

    def infer(self, ctx: Ctx, t: Term) -> Term:
        match t:
            case Var(x):
                ty = ctx.lookup(x)
                if ty is None:
                    raise UnboundVariable(f"unbound variable {x}")
                return ty
            case Nat() | Universe() | Circle():
                return Universe()
            case Zero():
                return Nat()
            case Suc(n):
                self.check(ctx, n, Nat())
                return Nat()
            case Base():
                return Circle()
            case Loop(r):
                self._scope_interval(ctx, r)
                return Circle()
            case Natrec(x, motive, n, z, s):
                self.check(ctx, n, Nat())
                y = self._open_var(ctx, x)
                self.check_type(ctx.bind(y, Nat()), self._rename_var(motive, x, y))
                self.check(ctx, z, term_subst(motive, x, Zero()))
                m = fresh("m")
                step = Pi(m, Nat(), arrow(term_subst(motive, x, Var(m)), term_subst(motive, x, Suc(Var(m)))))
                self.check(ctx, s, step)
                return term_subst(motive, x, n)
            case Pi(x, dom, cod) | Sigma(x, dom, cod):
                self.check_type(ctx, dom)
                y = self._open_var(ctx, x)
                self.check_type(ctx.bind(y, dom), self._rename_var(cod, x, y))
                return Universe()
            case Lam(x, dom, body):
                self.check_type(ctx, dom)
                y = self._open_var(ctx, x)
                return Pi(y, dom, self.infer(ctx.bind(y, dom), self._rename_var(body, x, y)))
            case App(f, a):
                pi = self._expect(ctx, self.infer(ctx, f), Pi, "a function type")
                self.check(ctx, a, pi.dom)
                return term_subst(pi.cod, pi.var, a)
            case Pair(u, v):
                return Sigma(fresh("_"), self.infer(ctx, u), self.infer(ctx, v))
            case Fst(p):
                return self._expect(ctx, self.infer(ctx, p), Sigma, "a pair type").dom
            case Snd(p):
                sigma = self._expect(ctx, self.infer(ctx, p), Sigma, "a pair type")
                return term_subst(sigma.cod, sigma.var, Fst(p))
            case PathT(i, line, left, right):
                k = self._open_name(ctx, i)
                line = self._rename_name(line, i, k)
                self.check_type(ctx.with_name(k), line)
                self.check(ctx, left, subst_name(line, k, I0))
                self.check(ctx, right, subst_name(line, k, I1))
                return Universe()
            case PAbs(i, body):
                k = self._open_name(ctx, i)
                body = self._rename_name(body, i, k)
                line = self.infer(ctx.with_name(k), body)
                return PathT(k, line, subst_name(body, k, I0), subst_name(body, k, I1))
            case PApp(p, r):
                self._scope_interval(ctx, r)
                path = self._expect(ctx, self.infer(ctx, p), PathT, "a path type")
                return subst_name(path.line, path.name, r)
            case SystemT(bs):
                self._check_system(ctx, bs, lambda sub, f, u: self.check_type(sub, u))
                return Universe()
            case SystemE(bs):
                k = min_true_index(bs)
                if k is None:
                    raise CannotSynthesize("a system needs its type unless one face is 1")
                ty = self.infer(ctx, bs[k].term)
                self.check(ctx, t, ty)
                return ty
            case GlueT(gbs, base):
                return self._infer_glue_type(ctx, gbs, base)
            case GlueE(bs, _):
                k = min_true_index(bs)
                if k is None:
                    raise CannotSynthesize("glue needs its Glue type")
                return self.infer(ctx, bs[k].term)
            case Unglue(bs, u):
                return self._infer_unglue(ctx, bs, u)
            case Comp(i, line, bs, u0):
                return self._infer_comp(ctx, i, line, bs, u0)
            case Hcomp(ty, i, bs, u0):
                self.check_type(ctx, ty)
                trunc = Trunc(ty)
                self.check(ctx, u0, trunc)
                k = self._open_name(ctx, i)
                self._check_constraints(ctx, k, trunc, _rename_branches(bs, i, k), u0)
                return trunc
            case Fwd(i, line, r, u):
                self._scope_interval(ctx, r)
                k = self._open_name(ctx, i)
                line = self._rename_name(line, i, k)
                self.check_type(ctx.with_name(k), line)
                self.check(ctx, u, Trunc(subst_name(line, k, r)))
                return Trunc(subst_name(line, k, I1))
            case Trunc(ty):
                self.check_type(ctx, ty)
                return Universe()
            case Inc(a):
                return Trunc(self.infer(ctx, a))
            case Squash(u, v, r):
                self._scope_interval(ctx, r)
                trunc = self._expect(ctx, self.infer(ctx, u), Trunc, "a truncation")
                self.check(ctx, v, trunc)
                return trunc
            case S1Elim(x, motive, s, b, l):
                self.check(ctx, s, Circle())
                y = self._open_var(ctx, x)
                self.check_type(ctx.bind(y, Circle()), self._rename_var(motive, x, y))
                self.check(ctx, b, term_subst(motive, x, Base()))
                j = fresh("i")
                self.check(ctx, l, PathT(j, term_subst(motive, x, Loop(iv_name(j))), b, b))
                return term_subst(motive, x, s)
            case InhElim(z, motive, w, tc, pc):
                return self._infer_inhelim(ctx, z, motive, w, tc, pc)
        raise CannotSynthesize(f"cannot infer a type for {_show(t)}")

    def _infer_glue_type(self, ctx: Ctx, gbs, base: Term) -> Term:
        self.check_type(ctx, base)
        for g in gbs:
            self._scope_face(ctx, g.face)
            for sub, f, _ in self._restrictions(ctx, g.face):
                ty = substitute(g.ty, f.images)
                self.check_type(sub, ty)
                self.check(sub, substitute(g.equiv, f.images), equiv_type(ty, substitute(base, f.images)))
        self._check_compatible(ctx, [Branch(g.face, g.ty) for g in gbs])
        return Universe()

    def _infer_unglue(self, ctx: Ctx, bs, u: Term) -> Term:
        for b in bs:
            self._scope_face(ctx, b.face)
        ty = self.whnf(ctx, self.infer(ctx, u))
        if isinstance(ty, GlueT):
            phi = face_join_all(g.face for g in ty.branches)
            got = face_join_all(b.face for b in bs)
            if got != phi:
                raise RestrictionUnsatisfied(f"unglue is given on {got} but the Glue type glues on {phi}", face=got)
            for b in bs:
                for g in ty.branches:
                    self.check_restriction(ctx, face_meet(b.face, g.face), b.term, g.equiv, "equivalences")
            return ty.base
        k = min_true_index(bs)
        if k is None:
            raise Mismatch("a Glue type", ty, f"unglue of {_show(u)} : {_show(ty)}, which is not a Glue type")
        equiv = self._expect(ctx, self.infer(ctx, bs[k].term), Sigma, "an equivalence")
        fun = self._expect(ctx, equiv.dom, Pi, "an equivalence")
        if not self.convert(ctx, ty, fun.dom):
            raise Mismatch(fun.dom, ty, f"unglue argument has type {_show(ty)}, expected {_show(fun.dom)}")
        return fun.cod

    def _check_constraints(self, ctx: Ctx, i: Name, line: Term, bs: Sequence[Branch], u0: Term) -> None:
        """Each constraint lies in line on its face and starts at u0; overlapping constraints agree."""
        for b in bs:
            self._scope_face(ctx, b.face)
        for k, b in enumerate(bs):
            for sub, f, alpha in self._restrictions(ctx, b.face):
                term = substitute(b.term, f.images)
                self.check(sub.with_name(i), term, substitute(line, f.images))
                if not self.convert(sub, subst_name(term, i, I0), substitute(u0, f.images)):
                    where = alpha.face if alpha is not None else F1
                    raise RestrictionUnsatisfied(f"constraint {k + 1} does not start at the base on {where}", face=where)
        self._check_compatible(ctx, bs, bound=i)

    def _infer_comp(self, ctx: Ctx, i: Name, line: Term, bs, u0: Term) -> Term:
        k = self._open_name(ctx, i)
        line = self._rename_name(line, i, k)
        bs = _rename_branches(bs, i, k)
        self.check_type(ctx.with_name(k), line)
        self.check(ctx, u0, subst_name(line, k, I0))
        self._check_constraints(ctx, k, line, bs, u0)
        return subst_name(line, k, I1)

    def _infer_inhelim(self, ctx: Ctx, z: Name, motive: Term, w: Term, tc: Term, pc: Term) -> Term:
        trunc = self._expect(ctx, self.infer(ctx, w), Trunc, "a truncation")
        y = self._open_var(ctx, z)
        self.check_type(ctx.bind(y, trunc), self._rename_var(motive, z, y))

        def at(point: Term) -> Term:
            return term_subst(motive, z, point)

        a = fresh("a")
        self.check(ctx, tc, Pi(a, trunc.ty, at(Inc(Var(a)))))
        u, v, x, yy, j = fresh("u"), fresh("v"), fresh("x"), fresh("y"), fresh("i")
        squash_ty = Pi(
            u,
            trunc,
            Pi(
                v,
                trunc,
                Pi(x, at(Var(u)), Pi(yy, at(Var(v)), PathT(j, at(Squash(Var(u), Var(v), iv_name(j))), Var(x), Var(yy)))),
            ),
        )
        self.check(ctx, pc, squash_ty)
        return at(w)


def _rename_branches(bs, i: Name, k: Name) -> tuple[Branch, ...]:
    if i == k:
        return tuple(bs)
    return tuple(Branch(b.face, rename_name(b.term, i, k)) for b in bs)


# -- definitions ------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    definition: str
    error: Optional[CheckError] = None

    @property
    def ok(self) -> bool:
        return self.error is None


def check_source(source: SourceFile, fuel: int = settings.CHECK_FUEL, upto: Optional[str] = None) -> list[Verdict]:
    """
    Check definitions in order, each against the ones before it. A
    rejected definition stays in scope with its declared type.
    """
    ctx = Ctx(names=source.names)
    verdicts: list[Verdict] = []
    for d in source:
        error: Optional[CheckError] = None
        checker = Checker(fuel)
        try:
            checker.check_type(ctx, d.ty)
            checker.check(ctx, d.body, d.ty)
        except CheckError as exc:
            error = exc
        except (SubstitutionError, FaceError) as exc:
            error = CheckError(exc.message)
        except RecursionError:
            error = CheckerIncomplete("term too deep for the checker")
        if error is not None:
            logger.info("%s rejected: %s", d.name, error.message)
        verdicts.append(Verdict(d.name, error))
        if d.name == upto:
            break
        ctx = ctx.define(d.var, d.ty, source.closed(d.name)[1])
    return verdicts


def check_definition(source: SourceFile, name: str, fuel: int = settings.CHECK_FUEL) -> None:
    """Raise the first rejection among `name` and the definitions it can see."""
    source.get(name)
    for verdict in check_source(source, fuel, upto=name):
        if verdict.error is not None:
            raise verdict.error
