"""
Name substitutions f : J -> I and capture-avoiding term substitution.

One traversal handles both: a map from interval names to interval
elements and a map from term variables to terms. A binder is renamed to a
fresh name whenever it could capture something free in the substituted
material; faces and intervals are renormalized on the way.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Union

from app.core.errors import SubstitutionError
from app.kernel.faces import Face, face_apply
from app.kernel.interval import Interval, iv_name, iv_subst
from app.kernel.names import Name, NameCtx, fresh
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

NameMap = Mapping[Name, Interval]
VarMap = Mapping[Name, Term]


class _Subst:
    __slots__ = ("names", "vars", "avoid")

    def __init__(self, names: NameMap, vars_: VarMap, avoid: frozenset[Name]):
        self.names = names
        self.vars = vars_
        self.avoid = avoid

    def touches(self, t: Term) -> bool:
        return bool(t.free_names & self.names.keys()) or bool(t.free_vars & self.vars.keys())

    def under_var(self, x: Name) -> tuple[Name, "_Subst"]:
        if x in self.avoid:
            x2 = fresh(x)
            return x2, _Subst(self.names, {**self.vars, x: Var(x2)}, self.avoid)
        if x in self.vars:
            return x, _Subst(self.names, {k: v for k, v in self.vars.items() if k != x}, self.avoid)
        return x, self

    def under_name(self, i: Name) -> tuple[Name, "_Subst"]:
        if i in self.avoid:
            i2 = fresh(i)
            return i2, _Subst({**self.names, i: iv_name(i2)}, self.vars, self.avoid)
        if i in self.names:
            return i, _Subst({k: v for k, v in self.names.items() if k != i}, self.vars, self.avoid)
        return i, self

    def iv(self, r: Interval) -> Interval:
        return iv_subst(r, self.names)

    def face(self, phi: Face) -> Face:
        return face_apply(phi, self.names)


def _branches(bs: tuple[Branch, ...], s: _Subst, inner: "_Subst | None" = None) -> tuple[Branch, ...]:
    inner = inner or s
    return tuple(Branch(s.face(b.face), _go(b.term, inner)) for b in bs)


def _go(t: Term, s: _Subst) -> Term:
    if not s.touches(t):
        return t
    match t:
        case Var(x):
            return s.vars.get(x, t)
        case Nat() | Zero() | Universe() | Circle() | Base():
            return t
        case Suc(a):
            return Suc(_go(a, s))
        case Fst(a):
            return Fst(_go(a, s))
        case Snd(a):
            return Snd(_go(a, s))
        case Inc(a):
            return Inc(_go(a, s))
        case Trunc(a):
            return Trunc(_go(a, s))
        case Natrec(x, motive, n, z, sc):
            x2, s2 = s.under_var(x)
            return Natrec(x2, _go(motive, s2), _go(n, s), _go(z, s), _go(sc, s))
        case Pi(x, a, b):
            x2, s2 = s.under_var(x)
            return Pi(x2, _go(a, s), _go(b, s2))
        case Sigma(x, a, b):
            x2, s2 = s.under_var(x)
            return Sigma(x2, _go(a, s), _go(b, s2))
        case Lam(x, a, body):
            x2, s2 = s.under_var(x)
            return Lam(x2, _go(a, s), _go(body, s2))
        case App(f, a):
            return App(_go(f, s), _go(a, s))
        case Pair(u, v):
            return Pair(_go(u, s), _go(v, s))
        case PathT(i, line, a0, a1):
            i2, s2 = s.under_name(i)
            return PathT(i2, _go(line, s2), _go(a0, s), _go(a1, s))
        case PAbs(i, body):
            i2, s2 = s.under_name(i)
            return PAbs(i2, _go(body, s2))
        case PApp(p, r):
            return PApp(_go(p, s), s.iv(r))
        case SystemT(bs):
            return SystemT(_branches(bs, s))
        case SystemE(bs):
            return SystemE(_branches(bs, s))
        case GlueT(bs, a):
            return GlueT(
                tuple(GlueBranch(s.face(b.face), _go(b.ty, s), _go(b.equiv, s)) for b in bs), _go(a, s)
            )
        case GlueE(bs, a):
            return GlueE(_branches(bs, s), _go(a, s))
        case Unglue(bs, a):
            return Unglue(_branches(bs, s), _go(a, s))
        case Comp(i, line, bs, u0):
            i2, s2 = s.under_name(i)
            return Comp(i2, _go(line, s2), _branches(bs, s, s2), _go(u0, s))
        case Loop(r):
            return Loop(s.iv(r))
        case S1Elim(x, motive, sc, b, l):
            x2, s2 = s.under_var(x)
            return S1Elim(x2, _go(motive, s2), _go(sc, s), _go(b, s), _go(l, s))
        case Squash(u, v, r):
            return Squash(_go(u, s), _go(v, s), s.iv(r))
        case Hcomp(a, i, bs, u0):
            i2, s2 = s.under_name(i)
            return Hcomp(_go(a, s), i2, _branches(bs, s, s2), _go(u0, s))
        case Fwd(i, line, r, u):
            i2, s2 = s.under_name(i)
            return Fwd(i2, _go(line, s2), s.iv(r), _go(u, s))
        case InhElim(z, motive, w, tc, pc):
            z2, s2 = s.under_var(z)
            return InhElim(z2, _go(motive, s2), _go(w, s), _go(tc, s), _go(pc, s))
    raise TypeError(f"not a term: {t!r}")


def substitute(t: Term, names: NameMap | None = None, vars_: VarMap | None = None) -> Term:
    """Simultaneous substitution of interval names and term variables; unmapped names stay."""
    names = dict(names or {})
    vars_ = dict(vars_ or {})
    if not names and not vars_:
        return t
    avoid: set[Name] = set()
    for r in names.values():
        avoid |= r.names
    for u in vars_.values():
        avoid |= u.free_names | u.free_vars
    return _go(t, _Subst(names, vars_, frozenset(avoid)))


def subst_name(t: Term, i: Name, r: Interval) -> Term:
    """t[i/r]"""
    return substitute(t, {i: r})


def rename_name(t: Term, i: Name, j: Name) -> Term:
    return substitute(t, {i: iv_name(j)})


def term_subst(t: Term, x: Name, u: Term) -> Term:
    """t[x/u], capture avoiding."""
    return substitute(t, vars_={x: u})


def subst_branches(bs: tuple[Branch, ...], names: NameMap) -> tuple[Branch, ...]:
    return tuple(Branch(face_apply(b.face, names), substitute(b.term, names)) for b in bs)


# -- first-class substitutions --------------------------------------------


@dataclass(frozen=True)
class NameSubst:
    """
    f : J -> I, sending every name of I (the domain) to an interval
    element over J (the codomain).
    """

    domain: NameCtx
    codomain: NameCtx
    images: Mapping[Name, Interval] = field(default_factory=dict)

    def __post_init__(self) -> None:
        missing = [str(n) for n in self.domain if n not in self.images]
        if missing:
            raise SubstitutionError(f"substitution is not total on {', '.join(missing)}")
        stray = [str(n) for n in self.images if n not in self.domain]
        if stray:
            raise SubstitutionError(f"substitution assigns names outside its domain: {', '.join(stray)}")
        for name, image in self.images.items():
            outside = image.names - set(self.codomain)
            if outside:
                raise SubstitutionError(
                    f"image of {name} mentions {', '.join(sorted(str(n) for n in outside))} outside the codomain"
                )

    @classmethod
    def identity(cls, ctx: NameCtx) -> "NameSubst":
        return cls(ctx, ctx, {n: iv_name(n) for n in ctx})

    def __call__(self, name: Name) -> Interval:
        return self.images[name]

    def __str__(self) -> str:
        return "{" + ", ".join(f"{n} -> {r}" for n, r in self.images.items()) + "}"


Substitutable = Union[Term, Interval, Face, tuple]


def apply(t: Substitutable, f: NameSubst) -> Substitutable:
    """Apply f to a term, interval element, face, or constraint list."""
    domain = set(f.domain)
    if isinstance(t, Interval):
        _check_domain(t.names, domain)
        return iv_subst(t, f.images)
    if isinstance(t, Face):
        _check_domain(t.names, domain)
        return face_apply(t, f.images)
    if isinstance(t, tuple):
        for b in t:
            _check_domain(b.face.names | b.term.free_names, domain)
        return subst_branches(t, f.images)
    _check_domain(t.free_names, domain)
    return substitute(t, f.images)


def _check_domain(names: frozenset[Name], domain: set[Name]) -> None:
    outside = names - domain
    if outside:
        raise SubstitutionError(
            f"free names {', '.join(sorted(str(n) for n in outside))} are outside the substitution's domain"
        )


def compose(f: NameSubst, g: NameSubst) -> NameSubst:
    """For f : J -> I and g : K -> J, the substitution acting as f then g."""
    if set(f.codomain) != set(g.domain):
        raise SubstitutionError(f"cannot compose: codomain {f.codomain} is not domain {g.domain}")
    return NameSubst(f.domain, g.codomain, {n: iv_subst(r, g.images) for n, r in f.images.items()})
