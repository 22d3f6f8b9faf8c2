"""
Abstract syntax of the calculus.

Terms are frozen dataclasses, one per construct; values and redexes share
the same representation. Binders carry their Name; term variables and
interval names are both Names but live in separate positions. Constraint
lists are tuples of Branch / GlueBranch and keep source order.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Optional

from app.kernel.faces import Face, face_apply
from app.kernel.interval import Interval, iv_name, iv_subst
from app.kernel.names import Name, fresh

_EMPTY: frozenset[Name] = frozenset()


class Term:
    """Base class of every syntax node."""

    @cached_property
    def _free(self) -> tuple[frozenset[Name], frozenset[Name]]:
        return _compute_free(self)

    @property
    def free_names(self) -> frozenset[Name]:
        return self._free[0]

    @property
    def free_vars(self) -> frozenset[Name]:
        return self._free[1]

    def __str__(self) -> str:
        from app.kernel.pretty import pretty

        return pretty(self)


class Branch(NamedTuple):
    face: Face
    term: Term


class GlueBranch(NamedTuple):
    face: Face
    ty: Term
    equiv: Term


Branches = tuple[Branch, ...]
GlueBranches = tuple[GlueBranch, ...]


@dataclass(frozen=True)
class Var(Term):
    name: Name


@dataclass(frozen=True)
class Nat(Term):
    pass


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Suc(Term):
    arg: Term


@dataclass(frozen=True)
class Natrec(Term):
    """natrec_{x.C} n z s, scrutinee first."""

    var: Name
    motive: Term
    scrutinee: Term
    zero: Term
    succ: Term


@dataclass(frozen=True)
class Pi(Term):
    var: Name
    dom: Term
    cod: Term


@dataclass(frozen=True)
class Lam(Term):
    var: Name
    dom: Term
    body: Term


@dataclass(frozen=True)
class App(Term):
    fun: Term
    arg: Term


@dataclass(frozen=True)
class Sigma(Term):
    var: Name
    dom: Term
    cod: Term


@dataclass(frozen=True)
class Pair(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Fst(Term):
    pair: Term


@dataclass(frozen=True)
class Snd(Term):
    pair: Term


@dataclass(frozen=True)
class PathT(Term):
    """Path^i A a0 a1; the non-dependent Path binds a name that A does not use."""

    name: Name
    line: Term
    left: Term
    right: Term


@dataclass(frozen=True)
class PAbs(Term):
    name: Name
    body: Term


@dataclass(frozen=True)
class PApp(Term):
    path: Term
    point: Interval


@dataclass(frozen=True)
class SystemT(Term):
    branches: Branches


@dataclass(frozen=True)
class SystemE(Term):
    branches: Branches


@dataclass(frozen=True)
class GlueT(Term):
    branches: GlueBranches
    base: Term


@dataclass(frozen=True)
class GlueE(Term):
    branches: Branches
    base: Term


@dataclass(frozen=True)
class Unglue(Term):
    """unglue [phi -> w] u; each branch term is the equivalence w."""

    branches: Branches
    arg: Term


@dataclass(frozen=True)
class Universe(Term):
    pass


@dataclass(frozen=True)
class Comp(Term):
    """comp^i A [phi -> u] u0; faces live outside i, line and branch terms inside."""

    name: Name
    line: Term
    branches: Branches
    base: Term


@dataclass(frozen=True)
class Circle(Term):
    pass


@dataclass(frozen=True)
class Base(Term):
    pass


@dataclass(frozen=True)
class Loop(Term):
    point: Interval


@dataclass(frozen=True)
class S1Elim(Term):
    var: Name
    motive: Term
    scrutinee: Term
    base_case: Term
    loop_case: Term


@dataclass(frozen=True)
class Trunc(Term):
    ty: Term


@dataclass(frozen=True)
class Inc(Term):
    arg: Term


@dataclass(frozen=True)
class Squash(Term):
    left: Term
    right: Term
    point: Interval


@dataclass(frozen=True)
class Hcomp(Term):
    """hcomp^i_{||A||} [phi -> u] u0; ty is A, the type under the truncation."""

    ty: Term
    name: Name
    branches: Branches
    base: Term


@dataclass(frozen=True)
class Fwd(Term):
    """fwd_{i.A} r u : ||A(i1)|| for u : ||A(r)||."""

    name: Name
    line: Term
    point: Interval
    arg: Term


@dataclass(frozen=True)
class InhElim(Term):
    var: Name
    motive: Term
    scrutinee: Term
    inc_case: Term
    squash_case: Term


# -- builders -------------------------------------------------------------


def numeral(n: int) -> Term:
    t: Term = Zero()
    for _ in range(n):
        t = Suc(t)
    return t


def as_numeral(t: Term) -> Optional[int]:
    n = 0
    while isinstance(t, Suc):
        n += 1
        t = t.arg
    return n if isinstance(t, Zero) else None


def arrow(dom: Term, cod: Term) -> Pi:
    return Pi(fresh("_"), dom, cod)


def product(left: Term, right: Term) -> Sigma:
    return Sigma(fresh("_"), left, right)


def path(line: Term, left: Term, right: Term) -> PathT:
    return PathT(fresh("_"), line, left, right)


def pabs(body_of) -> PAbs:
    """Build <j> body_of(j) for a fresh j."""
    j = fresh("j")
    return PAbs(j, body_of(j))


def papp(p: Term, name: Name) -> PApp:
    return PApp(p, iv_name(name))


# -- free names -----------------------------------------------------------


def _union(*parts: tuple[frozenset, frozenset]) -> tuple[frozenset, frozenset]:
    names: set[Name] = set()
    vars_: set[Name] = set()
    for n, v in parts:
        names |= n
        vars_ |= v
    return frozenset(names), frozenset(vars_)


def _bind_var(part: tuple[frozenset, frozenset], x: Name) -> tuple[frozenset, frozenset]:
    return part[0], part[1] - {x}


def _bind_name(part: tuple[frozenset, frozenset], i: Name) -> tuple[frozenset, frozenset]:
    return part[0] - {i}, part[1]


def _names(obj: "Interval | Face") -> tuple[frozenset, frozenset]:
    return obj.names, _EMPTY


def _compute_free(t: Term) -> tuple[frozenset[Name], frozenset[Name]]:
    match t:
        case Var(name):
            return _EMPTY, frozenset({name})
        case Nat() | Zero() | Universe() | Circle() | Base():
            return _EMPTY, _EMPTY
        case Suc(a) | Fst(a) | Snd(a) | Inc(a) | Trunc(a):
            return a._free
        case Natrec(x, motive, n, z, s):
            return _union(_bind_var(motive._free, x), n._free, z._free, s._free)
        case Pi(x, a, b) | Sigma(x, a, b) | Lam(x, a, b):
            return _union(a._free, _bind_var(b._free, x))
        case App(f, a) | Pair(f, a):
            return _union(f._free, a._free)
        case PathT(i, line, a0, a1):
            return _union(_bind_name(line._free, i), a0._free, a1._free)
        case PAbs(i, body):
            return _bind_name(body._free, i)
        case PApp(p, r):
            return _union(p._free, _names(r))
        case SystemT(bs) | SystemE(bs):
            return _union(*(_union(_names(b.face), b.term._free) for b in bs))
        case GlueT(bs, a):
            return _union(a._free, *(_union(_names(b.face), b.ty._free, b.equiv._free) for b in bs))
        case GlueE(bs, a) | Unglue(bs, a):
            return _union(a._free, *(_union(_names(b.face), b.term._free) for b in bs))
        case Comp(i, line, bs, u0):
            return _union(
                _bind_name(line._free, i),
                u0._free,
                *(_union(_names(b.face), _bind_name(b.term._free, i)) for b in bs),
            )
        case Loop(r):
            return _names(r)
        case S1Elim(x, motive, s, b, l):
            return _union(_bind_var(motive._free, x), s._free, b._free, l._free)
        case Squash(u, v, r):
            return _union(u._free, v._free, _names(r))
        case Hcomp(a, i, bs, u0):
            return _union(
                a._free, u0._free, *(_union(_names(b.face), _bind_name(b.term._free, i)) for b in bs)
            )
        case Fwd(i, line, r, u):
            return _union(_bind_name(line._free, i), _names(r), u._free)
        case InhElim(z, motive, w, tc, pc):
            return _union(_bind_var(motive._free, z), w._free, tc._free, pc._free)
    raise TypeError(f"not a term: {t!r}")


def free_names(t: Term) -> frozenset[Name]:
    """Interval names occurring free in t."""
    return t.free_names


def free_vars(t: Term) -> frozenset[Name]:
    return t.free_vars


# -- alpha equivalence ----------------------------------------------------


class _Renaming:
    """Both sides' bound names, sent to shared placeholders by binding depth."""

    __slots__ = ("left", "right", "depth")

    def __init__(self, left=None, right=None, depth: int = 0):
        self.left: dict[Name, Name] = left or {}
        self.right: dict[Name, Name] = right or {}
        self.depth = depth

    def bind(self, a: Name, b: Name) -> "_Renaming":
        # negative counters never occur in real names
        placeholder = Name("", -(self.depth + 1))
        return _Renaming({**self.left, a: placeholder}, {**self.right, b: placeholder}, self.depth + 1)


def _rename_interval(r: Interval, mapping: dict[Name, Name]) -> Interval:
    hits = {n: iv_name(mapping[n]) for n in r.names if n in mapping}
    return iv_subst(r, hits) if hits else r


def _rename_face(phi: Face, mapping: dict[Name, Name]) -> Face:
    hits = {n: iv_name(mapping[n]) for n in phi.names if n in mapping}
    return face_apply(phi, hits) if hits else phi


def _aeq_iv(r: Interval, s: Interval, env: _Renaming) -> bool:
    return _rename_interval(r, env.left) == _rename_interval(s, env.right)


def _aeq_face(phi: Face, psi: Face, env: _Renaming) -> bool:
    return _rename_face(phi, env.left) == _rename_face(psi, env.right)


def _aeq_branches(bs1, bs2, env: _Renaming, inner: Optional[_Renaming] = None) -> bool:
    inner = inner or env
    return len(bs1) == len(bs2) and all(
        _aeq_face(b1.face, b2.face, env) and _aeq(b1.term, b2.term, inner) for b1, b2 in zip(bs1, bs2)
    )


def _aeq(a: Term, b: Term, env: _Renaming) -> bool:
    if a is b and not env.left and not env.right:
        return True
    if type(a) is not type(b):
        return False
    match a:
        case Var(x):
            return env.left.get(x, x) == env.right.get(b.name, b.name)
        case Nat() | Zero() | Universe() | Circle() | Base():
            return True
        case Suc(x) | Inc(x):
            return _aeq(x, b.arg, env)
        case Trunc(x):
            return _aeq(x, b.ty, env)
        case Fst(x) | Snd(x):
            return _aeq(x, b.pair, env)
        case Natrec(x, motive, n, z, s) | S1Elim(x, motive, n, z, s) | InhElim(x, motive, n, z, s):
            fb = [getattr(b, f) for f in b.__match_args__]
            return (
                _aeq(motive, fb[1], env.bind(x, fb[0]))
                and _aeq(n, fb[2], env)
                and _aeq(z, fb[3], env)
                and _aeq(s, fb[4], env)
            )
        case Pi(x, d, c) | Sigma(x, d, c):
            return _aeq(d, b.dom, env) and _aeq(c, b.cod, env.bind(x, b.var))
        case Lam(x, d, body):
            return _aeq(d, b.dom, env) and _aeq(body, b.body, env.bind(x, b.var))
        case App(f, x):
            return _aeq(f, b.fun, env) and _aeq(x, b.arg, env)
        case Pair(u, v):
            return _aeq(u, b.left, env) and _aeq(v, b.right, env)
        case PathT(i, line, a0, a1):
            return _aeq(line, b.line, env.bind(i, b.name)) and _aeq(a0, b.left, env) and _aeq(a1, b.right, env)
        case PAbs(i, body):
            return _aeq(body, b.body, env.bind(i, b.name))
        case PApp(p, r):
            return _aeq_iv(r, b.point, env) and _aeq(p, b.path, env)
        case SystemT(bs) | SystemE(bs):
            return _aeq_branches(bs, b.branches, env)
        case GlueT(bs, base):
            return (
                len(bs) == len(b.branches)
                and all(
                    _aeq_face(g1.face, g2.face, env) and _aeq(g1.ty, g2.ty, env) and _aeq(g1.equiv, g2.equiv, env)
                    for g1, g2 in zip(bs, b.branches)
                )
                and _aeq(base, b.base, env)
            )
        case GlueE(bs, x):
            return _aeq_branches(bs, b.branches, env) and _aeq(x, b.base, env)
        case Unglue(bs, x):
            return _aeq_branches(bs, b.branches, env) and _aeq(x, b.arg, env)
        case Comp(i, line, bs, u0):
            inner = env.bind(i, b.name)
            return _aeq(line, b.line, inner) and _aeq_branches(bs, b.branches, env, inner) and _aeq(u0, b.base, env)
        case Loop(r):
            return _aeq_iv(r, b.point, env)
        case Squash(u, v, r):
            return _aeq_iv(r, b.point, env) and _aeq(u, b.left, env) and _aeq(v, b.right, env)
        case Hcomp(ty, i, bs, u0):
            return (
                _aeq(ty, b.ty, env)
                and _aeq_branches(bs, b.branches, env, env.bind(i, b.name))
                and _aeq(u0, b.base, env)
            )
        case Fwd(i, line, r, u):
            return _aeq(line, b.line, env.bind(i, b.name)) and _aeq_iv(r, b.point, env) and _aeq(u, b.arg, env)
    raise TypeError(f"not a term: {a!r}")


def alpha_eq(t1: Term, t2: Term) -> bool:
    """Equality up to consistent renaming of bound names and variables."""
    return _aeq(t1, t2, _Renaming())
