"""
Term-level constructions the reduction rules unfold into.

Every builder returns core syntax with fresh binder names. The equivalence
machinery (id_equiv, ptoeq, pres, equiv_extend) is what composition at the
universe and at Glue types needs; Equiv T A is encoded as

    (f : T -> A) * ((a : A) -> isContr ((x : T) * Path A a (f x)))
    isContr C = (c : C) * ((y : C) -> Path C c y)
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from app.kernel.faces import Face, face_apply, face_atom, face_forall, face_join_all
from app.kernel.interval import I0, I1, iv_meet, iv_name
from app.kernel.names import Name, fresh
from app.kernel.substitution import subst_branches, subst_name
from app.kernel.syntax import (
    App,
    Branch,
    Branches,
    Comp,
    Fst,
    GlueBranches,
    Lam,
    Nat,
    Natrec,
    PAbs,
    PApp,
    Pair,
    PathT,
    Pi,
    Sigma,
    Snd,
    SystemE,
    SystemT,
    Term,
    Unglue,
    Var,
    Zero,
    papp,
)


def fill(i: Name, line: Term, branches: Branches, base: Term) -> Comp:
    """fill^i A [phi -> u] u0 = comp^j A[i/i/\\j] [phi -> u[i/i/\\j], (i=0) -> u0] u0"""
    j = fresh("j")
    squeeze = {i: iv_meet(iv_name(i), iv_name(j))}
    constraints = tuple(Branch(b.face, subst_name(b.term, i, squeeze[i])) for b in branches)
    return Comp(j, subst_name(line, i, squeeze[i]), constraints + (Branch(face_atom(i, 0), base),), base)


def pred_term() -> Lam:
    """lambda n:N. natrec n 0 (lambda x lambda _. x)"""
    n, m, x, y = fresh("n"), fresh("m"), fresh("x"), fresh("_")
    return Lam(n, Nat(), Natrec(m, Nat(), Var(n), Zero(), Lam(x, Nat(), Lam(y, Nat(), Var(x)))))


def transp(i: Name, line: Term, base: Term) -> Comp:
    return Comp(i, line, (), base)


def is_contr(ty: Term) -> Sigma:
    c, y = fresh("c"), fresh("y")
    return Sigma(c, ty, Pi(y, ty, PathT(fresh("_"), ty, Var(c), Var(y))))


def fiber(fun: Term, dom: Term, cod: Term, point: Term) -> Sigma:
    """(x : dom) * Path cod point (fun x)"""
    x = fresh("x")
    return Sigma(x, dom, PathT(fresh("_"), cod, point, App(fun, Var(x))))


def equiv_type(dom: Term, cod: Term) -> Sigma:
    f, a = fresh("f"), fresh("a")
    return Sigma(
        f,
        Pi(fresh("_"), dom, cod),
        Pi(a, cod, is_contr(fiber(Var(f), dom, cod, Var(a)))),
    )


def id_equiv(ty: Term) -> Pair:
    """(lambda x.x, lambda a. ((a, <j>a), lambda y. <k> (y.2 @ k, <j> y.2 @ (j/\\k))))"""
    x, a, y, j, k, z = fresh("x"), fresh("a"), fresh("y"), fresh("j"), fresh("k"), fresh("z")
    fib = Sigma(z, ty, PathT(fresh("_"), ty, Var(a), Var(z)))
    q = Snd(Var(y))
    contraction = Lam(
        y,
        fib,
        PAbs(k, Pair(papp(q, k), PAbs(j, PApp(q, iv_meet(iv_name(j), iv_name(k)))))),
    )
    centre = Pair(Var(a), PAbs(fresh("j"), Var(a)))
    return Pair(Lam(x, ty, Var(x)), Lam(a, ty, Pair(centre, contraction)))


def ptoeq(i: Name, line: Term) -> Comp:
    """Transport of id_equiv A(i0) along Equiv A(i0) A; an Equiv A(i0) A(i1)."""
    start = subst_name(line, i, I0)
    return Comp(i, equiv_type(start, line), (), id_equiv(start))


def pres(i: Name, fun: Term, dom_line: Term, cod_line: Term, branches: Branches, base: Term) -> PAbs:
    """
    <j> comp^i A [psi -> f u, (j=1) -> f v] (f(i0) u0), v = fill^i T [psi -> u] u0.

    A path from comp^i A [psi -> f u] (f(i0) u0) to f(i1) (comp^i T [psi -> u] u0).
    """
    v = fill(i, dom_line, branches, base)
    j = fresh("j")
    constraints = tuple(Branch(b.face, App(fun, b.term)) for b in branches)
    constraints += (Branch(face_atom(j, 1), App(fun, v)),)
    return PAbs(j, Comp(i, cod_line, constraints, App(subst_name(fun, i, I0), base)))


def equiv_extend(
    equiv: Term, dom: Term, cod: Term, branches: Sequence[tuple[Face, tuple[Term, Term]]], point: Term
) -> tuple[Term, Term]:
    """
    Extend partial fibre elements (t_k, alpha_k) over phi_k to a total one,
    contracting towards them from the centre of the fibre of `point`.
    """
    fib = fiber(Fst(equiv), dom, cod, point)
    centre = Fst(App(Snd(equiv), point))
    contraction = Snd(App(Snd(equiv), point))
    j = fresh("j")
    constraints = tuple(Branch(face, PApp(App(contraction, Pair(t, alpha)), iv_name(j))) for face, (t, alpha) in branches)
    result = Comp(j, fib, constraints, centre)
    return Fst(result), Snd(result)


@dataclass(frozen=True)
class GlueCompInputs:
    """comp^i (Glue [phi -> (T,w)] A) [psi -> u] u0, taken apart."""

    name: Name
    glue: GlueBranches
    base_line: Term
    branches: Branches
    base: Term

    @property
    def face(self) -> Face:
        return face_join_all(g.face for g in self.glue)

    @property
    def ty_line(self) -> Term:
        if len(self.glue) == 1:
            return self.glue[0].ty
        return SystemT(tuple(Branch(g.face, g.ty) for g in self.glue))

    @property
    def equiv_line(self) -> Term:
        if len(self.glue) == 1:
            return self.glue[0].equiv
        return SystemE(tuple(Branch(g.face, g.equiv) for g in self.glue))

    @property
    def unglue_annotation(self) -> Branches:
        return tuple(Branch(g.face, g.equiv) for g in self.glue)


def glue_comp_parts(inputs: GlueCompInputs) -> tuple[Term, Term]:
    """Build (t1, a1) with comp^i (Glue ..) [psi -> u] u0 = glue [phi(i1) -> t1] a1."""
    i = inputs.name
    at0, at1 = {i: I0}, {i: I1}
    w, T, A = inputs.equiv_line, inputs.ty_line, inputs.base_line
    annotation = inputs.unglue_annotation

    unglued = tuple(Branch(b.face, Unglue(annotation, b.term)) for b in inputs.branches)
    a0 = Unglue(subst_branches(annotation, at0), inputs.base)
    delta = face_forall(i, inputs.face)
    a1_prime = Comp(i, A, unglued, a0)
    t1_prime = Comp(i, T, inputs.branches, inputs.base)
    omega = pres(i, Fst(w), T, A, inputs.branches, inputs.base)

    partial: list[tuple[Face, tuple[Term, Term]]] = [(delta, (t1_prime, omega))]
    for b in inputs.branches:
        partial.append((b.face, (subst_name(b.term, i, I1), PAbs(fresh("j"), a1_prime))))
    t1, alpha = equiv_extend(
        subst_name(w, i, I1), subst_name(T, i, I1), subst_name(A, i, I1), partial, a1_prime
    )

    j = fresh("j")
    phi1 = face_apply(inputs.face, at1)
    constraints = (Branch(phi1, PApp(alpha, iv_name(j))),) + tuple(
        Branch(b.face, subst_name(b.term, i, I1)) for b in unglued
    )
    a1 = Comp(j, subst_name(A, i, I1), constraints, a1_prime)
    return t1, a1
