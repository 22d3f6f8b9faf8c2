"""
Independent oracle: a big-step interpreter in the point model.

Every interval name, free or bound, is sent to 0 or 1, so faces and
interval elements are plain booleans and no reduction rule of the kernel
is involved. Composition at a point is "the constraint at i=1 when its
face holds, otherwise transport along the line", and transport is
defined by recursion on the two endpoint types.

A natural over a name context evaluates to the same numeral under every
endpoint assignment, so the kernel's numeral must match the interpreter
for each assignment of the context's names. For truncations the
interpreter agrees with the kernel's witness policy at the all-zero
assignment.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Any, Callable, Iterator, Mapping, Optional

from app.kernel import syntax as s
from app.kernel.faces import Face
from app.kernel.interval import Interval
from app.kernel.names import Name, NameCtx


class OracleError(Exception):
    pass


# -- values -----------------------------------------------------------------


@dataclass(frozen=True)
class VPair:
    left: Any
    right: Any


@dataclass(frozen=True)
class VPath:
    at: Callable[[int], Any]


@dataclass(frozen=True)
class VBase:
    pass


@dataclass(frozen=True)
class VInc:
    arg: Any


@dataclass(frozen=True)
class VGlue:
    """An element of a Glue type whose face is false at this point."""

    base: Any


# -- type values ------------------------------------------------------------


@dataclass(frozen=True)
class TNat:
    pass


@dataclass(frozen=True)
class TUniverse:
    pass


@dataclass(frozen=True)
class TCircle:
    pass


@dataclass(frozen=True)
class TPi:
    dom: Any
    cod: Callable[[Any], Any]


@dataclass(frozen=True)
class TSigma:
    dom: Any
    cod: Callable[[Any], Any]


@dataclass(frozen=True)
class TPath:
    line: Callable[[int], Any]
    left: Any
    right: Any


@dataclass(frozen=True)
class TTrunc:
    ty: Any


@dataclass(frozen=True)
class TGlue:
    holds: bool
    ty: Any
    equiv: Any
    base: Any


def apply(f: Any, a: Any) -> Any:
    if not callable(f):
        raise OracleError(f"not a function: {f!r}")
    return f(a)


def fst(p: Any) -> Any:
    if not isinstance(p, VPair):
        raise OracleError(f"not a pair: {p!r}")
    return p.left


def snd(p: Any) -> Any:
    if not isinstance(p, VPair):
        raise OracleError(f"not a pair: {p!r}")
    return p.right


def inverse(equiv: Any, a: Any) -> Any:
    """The centre of the fibre over a."""
    return fst(fst(apply(snd(equiv), a)))


def transport(t0: Any, t1: Any, v: Any) -> Any:
    """Move v : t0 to t1, t0 and t1 being the ends of one line of types."""
    match t0:
        case TNat() | TUniverse() | TCircle():
            return v
        case TPi():
            def moved(y: Any) -> Any:
                y0 = transport(t1.dom, t0.dom, y)
                return transport(t0.cod(y0), t1.cod(y), apply(v, y0))

            return moved
        case TSigma():
            a1 = transport(t0.dom, t1.dom, fst(v))
            return VPair(a1, transport(t0.cod(fst(v)), t1.cod(a1), snd(v)))
        case TPath():
            return VPath(lambda k: t1.left if k == 0 else t1.right)
        case TTrunc():
            if not isinstance(v, VInc):
                raise OracleError(f"not a truncation element: {v!r}")
            return VInc(transport(t0.ty, t1.ty, v.arg))
        case TGlue():
            a0 = apply(fst(t0.equiv), v) if t0.holds else _glue_base(v)
            a1 = transport(t0.base, t1.base, a0)
            return inverse(t1.equiv, a1) if t1.holds else VGlue(a1)
    raise OracleError(f"cannot transport along {t0!r}")


def _glue_base(v: Any) -> Any:
    if not isinstance(v, VGlue):
        raise OracleError(f"not a glue element: {v!r}")
    return v.base


# -- evaluation -------------------------------------------------------------


class PointModel:
    def __init__(self, names: Mapping[Name, int]):
        self.names = dict(names)

    def at(self, i: Name, bit: int) -> "PointModel":
        return PointModel({**self.names, i: bit})

    def bit(self, n: Name) -> int:
        if n not in self.names:
            raise OracleError(f"unbound name {n}")
        return self.names[n]

    def interval(self, r: Interval) -> int:
        return int(any(all(self.bit(n) == int(pos) for n, pos in clause) for clause in r.clauses))

    def face(self, phi: Face) -> bool:
        return any(all(self.bit(n) == bit for n, bit in c) for c in phi.conjuncts)

    def first_true(self, branches) -> Optional[int]:
        for k, b in enumerate(branches):
            if self.face(b[0]):
                return k
        return None

    def eval(self, t: s.Term, env: Mapping[Name, Any]) -> Any:
        match t:
            case s.Var(x):
                if x not in env:
                    raise OracleError(f"unbound {x}")
                return env[x]
            case s.Zero():
                return 0
            case s.Suc(a):
                return self.eval(a, env) + 1
            case s.Natrec(_, _, n, z, sc):
                count = self.eval(n, env)
                acc = self.eval(z, env)
                step = self.eval(sc, env)
                for m in range(count):
                    acc = apply(apply(step, m), acc)
                return acc
            case s.Lam(x, _, body):
                return lambda v: self.eval(body, {**env, x: v})
            case s.App(f, a):
                return apply(self.eval(f, env), self.eval(a, env))
            case s.Pair(u, v):
                return VPair(self.eval(u, env), self.eval(v, env))
            case s.Fst(p):
                return fst(self.eval(p, env))
            case s.Snd(p):
                return snd(self.eval(p, env))
            case s.PAbs(i, body):
                return VPath(lambda bit: self.at(i, bit).eval(body, env))
            case s.PApp(p, r):
                path = self.eval(p, env)
                if not isinstance(path, VPath):
                    raise OracleError(f"not a path: {path!r}")
                return path.at(self.interval(r))
            case s.SystemE(bs) | s.SystemT(bs):
                k = self.first_true(bs)
                if k is None:
                    raise OracleError("no branch of a system holds")
                return self.eval(bs[k].term, env)
            case s.GlueE(bs, a):
                k = self.first_true(bs)
                return VGlue(self.eval(a, env)) if k is None else self.eval(bs[k].term, env)
            case s.Unglue(bs, u):
                k = self.first_true(bs)
                value = self.eval(u, env)
                return _glue_base(value) if k is None else apply(fst(self.eval(bs[k].term, env)), value)
            case s.Comp(i, line, bs, u0):
                k = self.first_true(bs)
                if k is not None:
                    return self.at(i, 1).eval(bs[k].term, env)
                return transport(self.at(i, 0).eval(line, env), self.at(i, 1).eval(line, env), self.eval(u0, env))
            case s.Base() | s.Loop():
                return VBase()
            case s.S1Elim(_, _, sc, b, _):
                self.eval(sc, env)
                return self.eval(b, env)
            case s.Inc(a):
                return VInc(self.eval(a, env))
            case s.Squash(u, v, r):
                return self.eval(u if self.interval(r) == 0 else v, env)
            case s.Hcomp(_, i, bs, u0):
                k = self.first_true(bs)
                if k is not None:
                    return self.at(i, 1).eval(bs[k].term, env)
                return self.eval(u0, env)
            case s.Fwd(i, line, r, u):
                start = self.at(i, self.interval(r)).eval(line, env)
                return transport(TTrunc(start), TTrunc(self.at(i, 1).eval(line, env)), self.eval(u, env))
            case s.InhElim(_, _, w, tc, _):
                value = self.eval(w, env)
                if not isinstance(value, VInc):
                    raise OracleError(f"not a truncation element: {value!r}")
                return apply(self.eval(tc, env), value.arg)
            # types
            case s.Nat():
                return TNat()
            case s.Universe():
                return TUniverse()
            case s.Circle():
                return TCircle()
            case s.Pi(x, dom, cod):
                return TPi(self.eval(dom, env), lambda v: self.eval(cod, {**env, x: v}))
            case s.Sigma(x, dom, cod):
                return TSigma(self.eval(dom, env), lambda v: self.eval(cod, {**env, x: v}))
            case s.PathT(i, line, a, b):
                return TPath(lambda bit: self.at(i, bit).eval(line, env), self.eval(a, env), self.eval(b, env))
            case s.Trunc(a):
                return TTrunc(self.eval(a, env))
            case s.GlueT(gbs, a):
                k = self.first_true(gbs)
                base = self.eval(a, env)
                if k is None:
                    return TGlue(False, None, None, base)
                return TGlue(True, self.eval(gbs[k].ty, env), self.eval(gbs[k].equiv, env), base)
        raise OracleError(f"no point-model meaning for {type(t).__name__}")


def endpoint_assignments(ctx: NameCtx) -> Iterator[dict[Name, int]]:
    for bits in itertools.product((0, 1), repeat=len(ctx)):
        yield dict(zip(ctx.names, bits))


def evaluate_at(t: s.Term, names: Mapping[Name, int]) -> Any:
    return PointModel(names).eval(t, {})


def numerals(ctx: NameCtx, t: s.Term) -> set[int]:
    """The values of t at every endpoint assignment; a singleton for a well-typed natural."""
    return {evaluate_at(t, env) for env in endpoint_assignments(ctx)}


def witness_numeral(ctx: NameCtx, t: s.Term) -> Any:
    value = evaluate_at(t, {n: 0 for n in ctx})
    if not isinstance(value, VInc):
        raise OracleError(f"not a truncation element: {value!r}")
    return value.arg
