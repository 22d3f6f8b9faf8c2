"""Printing terms, interval elements and faces in parseable surface syntax."""
from __future__ import annotations

from typing import Callable, Iterable

from app.kernel.faces import Face, F0, F1
from app.kernel.interval import I0, I1, Interval
from app.kernel.names import Name

# precedence levels
TERM, PROD, APP, ARG = 0, 1, 2, 3

NameShow = Callable[[Name], str]


def _show_free(name: Name) -> str:
    return str(name)


def pretty_interval(r: Interval, show: NameShow = _show_free, atomic: bool = False) -> str:
    if r == I0:
        return "0"
    if r == I1:
        return "1"

    def literal(name: Name, pos: bool) -> str:
        return show(name) if pos else "~" + show(name)

    meets = [" /\\ ".join(literal(n, p) for n, p in clause) for clause in r.clauses]
    text = " \\/ ".join(meets)
    single = len(r.clauses) == 1 and len(r.clauses[0]) == 1
    return f"({text})" if atomic and not single else text


def pretty_face(phi: Face, show: NameShow = _show_free) -> str:
    if phi == F0:
        return "0F"
    if phi == F1:
        return "1F"
    conjuncts = [" /\\ ".join(f"({show(n)}={bit})" for n, bit in c) for c in phi.conjuncts]
    return " \\/ ".join(conjuncts)


class _Printer:
    def __init__(self, taken: Iterable[str]):
        self.taken = set(taken)
        self.env: dict[Name, str] = {}

    def show(self, name: Name) -> str:
        return self.env.get(name) or str(name)

    def bind(self, name: Name) -> tuple[str, "_Printer"]:
        base = name.ident or "x"
        display, k = base, 0
        while display in self.taken:
            k += 1
            display = f"{base}{k}"
        inner = _Printer(self.taken | {display})
        inner.env = {**self.env, name: display}
        return display, inner

    def iv(self, r: Interval, atomic: bool = True) -> str:
        return pretty_interval(r, self.show, atomic)

    def face(self, phi: Face) -> str:
        return pretty_face(phi, self.show)

    def system(self, branches, inner: "_Printer | None" = None) -> str:
        inner = inner or self
        return "[" + ", ".join(f"{self.face(b.face)} -> {inner.term(b.term, TERM)}" for b in branches) + "]"

    def term(self, t, level: int = TERM) -> str:
        from app.kernel import syntax as s

        def paren(text: str, own: int) -> str:
            return f"({text})" if own < level else text

        match t:
            case s.Var(x):
                return self.show(x)
            case s.Nat():
                return "N"
            case s.Zero():
                return "0"
            case s.Universe():
                return "U"
            case s.Circle():
                return "S1"
            case s.Base():
                return "base"
            case s.Suc(a):
                return paren(f"suc {self.term(a, ARG)}", APP)
            case s.Natrec(x, motive, n, z, sc):
                return paren(f"natrec {self.motive(x, motive)} {self.args(n, z, sc)}", APP)
            case s.Pi(x, dom, cod):
                if x not in cod.free_vars:
                    return paren(f"{self.term(dom, PROD)} -> {self.term(cod, TERM)}", TERM)
                d, inner = self.bind(x)
                return paren(f"({d} : {self.term(dom)}) -> {inner.term(cod, TERM)}", TERM)
            case s.Sigma(x, dom, cod):
                if x not in cod.free_vars:
                    return paren(f"{self.term(dom, APP)} * {self.term(cod, PROD)}", PROD)
                d, inner = self.bind(x)
                return paren(f"({d} : {self.term(dom)}) * {inner.term(cod, TERM)}", TERM)
            case s.Lam(x, dom, body):
                d, inner = self.bind(x)
                return paren(f"\\({d} : {self.term(dom)}) -> {inner.term(body, TERM)}", TERM)
            case s.App(f, a):
                return paren(f"{self.term(f, APP)} {self.term(a, ARG)}", APP)
            case s.Pair(u, v):
                return f"({self.term(u)}, {self.term(v)})"
            case s.Fst(p):
                return f"{self.term(p, ARG)}.1"
            case s.Snd(p):
                return f"{self.term(p, ARG)}.2"
            case s.PathT(i, line, a0, a1):
                if i not in line.free_names:
                    return paren(f"Path {self.args(line, a0, a1)}", APP)
                d, inner = self.bind(i)
                return paren(f"Path^{d} {inner.term(line, ARG)} {self.args(a0, a1)}", APP)
            case s.PAbs(i, body):
                d, inner = self.bind(i)
                return paren(f"<{d}> {inner.term(body, TERM)}", TERM)
            case s.PApp(p, r):
                return paren(f"{self.term(p, APP)} @ {self.iv(r)}", APP)
            case s.SystemT(bs):
                return paren(f"Sys {self.system(bs)}", APP)
            case s.SystemE(bs):
                return self.system(bs)
            case s.GlueT(bs, a):
                glue = ", ".join(
                    f"{self.face(b.face)} -> ({self.term(b.ty)}, {self.term(b.equiv)})" for b in bs
                )
                return paren(f"Glue [{glue}] {self.term(a, ARG)}", APP)
            case s.GlueE(bs, a):
                return paren(f"glue {self.system(bs)} {self.term(a, ARG)}", APP)
            case s.Unglue(bs, u):
                return paren(f"unglue {self.system(bs)} {self.term(u, ARG)}", APP)
            case s.Comp(i, line, bs, u0):
                d, inner = self.bind(i)
                return paren(
                    f"comp^{d} {inner.term(line, ARG)} {self.system(bs, inner)} {self.term(u0, ARG)}", APP
                )
            case s.Loop(r):
                return paren(f"loop {self.iv(r)}", APP)
            case s.S1Elim(x, motive, sc, b, l):
                return paren(f"S1elim {self.motive(x, motive)} {self.args(sc, b, l)}", APP)
            case s.Trunc(a):
                return paren(f"inh {self.term(a, ARG)}", APP)
            case s.Inc(a):
                return paren(f"inc {self.term(a, ARG)}", APP)
            case s.Squash(u, v, r):
                return paren(f"squash {self.args(u, v)} {self.iv(r)}", APP)
            case s.Hcomp(a, i, bs, u0):
                d, inner = self.bind(i)
                return paren(
                    f"hcomp^{d} {self.term(a, ARG)} {self.system(bs, inner)} {self.term(u0, ARG)}", APP
                )
            case s.Fwd(i, line, r, u):
                d, inner = self.bind(i)
                return paren(f"fwd^{d} {inner.term(line, ARG)} {self.iv(r)} {self.term(u, ARG)}", APP)
            case s.InhElim(z, motive, w, tc, pc):
                return paren(f"inhelim {self.motive(z, motive)} {self.args(w, tc, pc)}", APP)
        raise TypeError(f"not a term: {t!r}")

    def motive(self, x: Name, motive) -> str:
        d, inner = self.bind(x)
        return "{" + f"{d}. {inner.term(motive)}" + "}"

    def args(self, *ts) -> str:
        return " ".join(self.term(t, ARG) for t in ts)


def pretty(t) -> str:
    """Surface syntax for t; bound names get readable displays clashing with nothing free."""
    taken = {str(n) for n in t.free_names} | {str(x) for x in t.free_vars}
    return _Printer(taken).term(t)
