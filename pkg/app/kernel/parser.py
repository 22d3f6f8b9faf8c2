"""
Parsing .ctt sources.

Layout is handled here: a line starting at column 0 opens a definition,
indented lines continue it, `--` starts a comment, and `names i j` lines
declare the interval names every definition may use freely. Each
definition is then parsed by the lark grammar next to this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Optional

from lark import Lark, Token, Transformer, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from app.core.errors import FaceError, KernelError, ParseError
from app.kernel import derived
from app.kernel.faces import F0, F1, Face, face_forall, face_join, face_meet, face_of_eq0, face_of_eq1
from app.kernel.interval import I0, I1, Interval, iv_join, iv_meet, iv_name, iv_rev
from app.kernel.names import Name, NameCtx
from app.kernel.source import Definition, SourceFile
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
    arrow,
    numeral,
    path,
    product,
)

GRAMMAR = Path(__file__).with_name("grammar.lark")


@lru_cache(maxsize=1)
def _lark() -> Lark:
    return Lark(
        GRAMMAR.read_text(encoding="utf-8"),
        parser="earley",
        lexer="basic",
        start=["definition", "term", "interval", "face", "query"],
        maybe_placeholders=False,
    )


@dataclass(frozen=True)
class FaceQuery:
    """A face expression or a question about faces, as read by `faces`."""

    kind: str  # normal, forall, leq, eq, split, irr
    faces: tuple[Face, ...]


def _bit(tok: Token) -> int:
    value = int(tok)
    if value not in (0, 1):
        raise ParseError(f"interval endpoint must be 0 or 1, got {value}", tok.line or 0, tok.column or 0)
    return value


@v_args(inline=True)
class _Elaborate(Transformer):
    # terms
    def lam(self, x, dom, body):
        return Lam(Name(str(x)), dom, body)

    def pabs(self, i, body):
        return PAbs(Name(str(i)), body)

    def pi(self, x, dom, cod):
        return Pi(Name(str(x)), dom, cod)

    def sigma(self, x, dom, cod):
        return Sigma(Name(str(x)), dom, cod)

    def arrow(self, dom, cod):
        return arrow(dom, cod)

    def product(self, left, right):
        return product(left, right)

    def application(self, f, a):
        return App(f, a)

    def papp(self, p, r):
        return PApp(p, r)

    def suc(self, a):
        return Suc(a)

    def natrec(self, motive, n, z, s):
        return Natrec(motive[0], motive[1], n, z, s)

    def comp(self, i, line, bs, base):
        return Comp(Name(str(i)), line, bs, base)

    def fill(self, i, line, bs, base):
        return derived.fill(Name(str(i)), line, bs, base)

    def hcomp(self, i, ty, bs, base):
        return Hcomp(ty, Name(str(i)), bs, base)

    def fwd(self, i, line, r, u):
        return Fwd(Name(str(i)), line, r, u)

    def glue_type(self, gbs, base):
        return GlueT(gbs, base)

    def glue_elem(self, bs, base):
        return GlueE(bs, base)

    def unglue(self, bs, u):
        return Unglue(bs, u)

    def system_type(self, bs):
        return SystemT(bs)

    def system_elem(self, bs):
        return SystemE(bs)

    def path(self, line, left, right):
        return path(line, left, right)

    def dpath(self, i, line, left, right):
        return PathT(Name(str(i)), line, left, right)

    def loop(self, r):
        return Loop(r)

    def s1elim(self, motive, s, b, l):
        return S1Elim(motive[0], motive[1], s, b, l)

    def trunc(self, a):
        return Trunc(a)

    def inc(self, a):
        return Inc(a)

    def squash(self, u, v, r):
        return Squash(u, v, r)

    def inhelim(self, motive, w, tc, pc):
        return InhElim(motive[0], motive[1], w, tc, pc)

    def var(self, x):
        return Var(Name(str(x)))

    def numeral(self, n):
        return numeral(int(n))

    def zero(self):
        return Zero()

    def nat(self):
        return Nat()

    def universe(self):
        return Universe()

    def circle(self):
        return Circle()

    def base(self):
        return Base()

    def pair(self, u, v):
        return Pair(u, v)

    def fst(self, p):
        return Fst(p)

    def snd(self, p):
        return Snd(p)

    def motive(self, x, body):
        return Name(str(x)), body

    def system(self, *branches):
        return tuple(b for b in branches if b is not None)

    def branch(self, face, term):
        return Branch(face, term)

    def glue_system(self, *branches):
        return tuple(b for b in branches if b is not None)

    def glue_branch(self, face, ty, equiv):
        return GlueBranch(face, ty, equiv)

    # interval
    def ijoin(self, a, b):
        return iv_join(a, b)

    def imeet(self, a, b):
        return iv_meet(a, b)

    def iconst(self, tok):
        return I1 if _bit(tok) else I0

    def iname(self, tok):
        return iv_name(Name(str(tok)))

    def irev(self, a):
        return iv_rev(a)

    # faces
    def fforall(self, i, phi):
        return face_forall(Name(str(i)), phi)

    def fjoin(self, a, b):
        return face_join(a, b)

    def fmeet(self, a, b):
        return face_meet(a, b)

    def fatom(self, r, tok):
        return face_of_eq1(r) if _bit(tok) else face_of_eq0(r)

    def fzero(self, _):
        return F0

    def fone(self, _):
        return F1

    # queries
    def q_leq(self, a, b):
        return FaceQuery("leq", (a, b))

    def q_eq(self, a, b):
        return FaceQuery("eq", (a, b))

    def q_split(self, a, b):
        return FaceQuery("split", (a, b))

    def q_irr(self, a):
        return FaceQuery("irr", (a,))

    def q_normal(self, a):
        return FaceQuery("normal", (a,))

    # definitions
    def param(self, x, ty):
        return Name(str(x)), ty

    def definition(self, name, *rest):
        *params, ty, body = rest
        for x, dom in reversed(params):
            ty = Pi(x, dom, ty)
            body = Lam(x, dom, body)
        return str(name), ty, body


def _parse(text: str, start: str, line_offset: int = 0):
    try:
        tree = _lark().parse(text, start=start)
        return _Elaborate().transform(tree)
    except VisitError as exc:
        inner = exc.orig_exc
        if isinstance(inner, ParseError):
            raise ParseError(inner.message.split(" (line")[0], inner.line + line_offset, inner.column) from None
        if isinstance(inner, KernelError):
            raise ParseError(inner.message, line_offset + 1, 1) from None
        raise
    except UnexpectedInput as exc:
        raise _translate(exc, text, line_offset) from None


def _translate(exc: UnexpectedInput, text: str, line_offset: int) -> ParseError:
    line, column = getattr(exc, "line", -1), getattr(exc, "column", -1)
    if isinstance(exc, UnexpectedEOF) or line is None or line < 1:
        lines = text.splitlines() or [""]
        line, column = len(lines), len(lines[-1]) + 1
        return ParseError("unexpected end of input", line + line_offset, column)
    if isinstance(exc, UnexpectedToken):
        message = f"unexpected {exc.token!s}" if str(exc.token) else "unexpected end of input"
    elif isinstance(exc, UnexpectedCharacters):
        message = f"unexpected character {exc.char!r}"
    else:
        message = "syntax error"
    return ParseError(message, line + line_offset, column)


def parse_term(text: str) -> Term:
    return _parse(text, "term")


def parse_interval(text: str) -> Interval:
    return _parse(text, "interval")


def parse_face(text: str) -> Face:
    return _parse(text, "face")


def parse_query(text: str) -> FaceQuery:
    """A face, `phi <= psi`, `phi == psi`, `split phi psi` or `irr phi`; `forall` is part of faces."""
    query = _parse(text, "query")
    if query.kind == "normal" and text.lstrip().startswith("forall"):
        return FaceQuery("forall", query.faces)
    return query


def _strip_comment(line: str) -> str:
    k = line.find("--")
    return line if k < 0 else line[:k]


def parse(text: str) -> SourceFile:
    """Parse a whole .ctt source into its name preamble and definitions."""
    names: list[str] = []
    chunks: list[tuple[int, list[str]]] = []
    current: Optional[list[str]] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw).rstrip()
        if not line.strip():
            if current is not None:
                current.append("")
            continue
        if not line[0].isspace():
            words = line.split()
            if words[0] == "names":
                names.extend(words[1:])
                current = None
                continue
            current = [line]
            chunks.append((lineno, current))
            continue
        if current is None:
            raise ParseError("indented line outside a definition", lineno, 1)
        current.append(line)

    try:
        ctx = NameCtx.of(*names)
    except FaceError as exc:
        raise ParseError(exc.message, 1, 1) from None

    definitions: list[Definition] = []
    seen: set[str] = set()
    for start, lines in chunks:
        name, ty, body = _parse("\n".join(lines), "definition", start - 1)
        if name in seen:
            raise ParseError(f"duplicate definition {name!r}", start, 1)
        if name in names:
            raise ParseError(f"definition {name!r} shadows an interval name", start, 1)
        seen.add(name)
        definitions.append(Definition(name, ty, body, start))
    return SourceFile(ctx, tuple(definitions))
