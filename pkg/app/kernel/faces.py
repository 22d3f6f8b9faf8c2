"""
The face lattice F(I).

A face is an irredundant join of conjuncts, a conjunct being a set of
atoms (i=0) / (i=1). Conjuncts containing both (i=0) and (i=1) are 0 and
are dropped during normalization.

Order is decided conjunct-wise. A nonzero conjunct c is join-prime: if
c <= d1 \\/ ... \\/ dn then c <= dk for some k. (Pick the endpoint
assignment that satisfies exactly the atoms of c and sends every other
name to an interior point; it satisfies c, hence some dk, and dk can only
use atoms of c.) So phi <= psi iff every conjunct of phi contains the
atoms of some conjunct of psi.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import TYPE_CHECKING, Iterable, Mapping, Optional, Sequence

from app.core.errors import FaceError
from app.kernel.interval import Interval, iv_const, iv_name, iv_rev
from app.kernel.names import Name, NameCtx

if TYPE_CHECKING:
    from app.kernel.substitution import NameSubst

# (name, endpoint): (i, 0) is (i=0)
Atom = tuple[Name, int]
Conjunct = tuple[Atom, ...]


class Split(str, enum.Enum):
    LEFT = "Left"
    RIGHT = "Right"
    NEITHER = "Neither"


def _consistent(atoms: frozenset) -> bool:
    seen: dict[Name, int] = {}
    for name, bit in atoms:
        if seen.setdefault(name, bit) != bit:
            return False
    return True


def _normalize(conjuncts: Iterable[Iterable[Atom]]) -> tuple[Conjunct, ...]:
    sets = {s for s in (frozenset(c) for c in conjuncts) if _consistent(s)}
    kept = [c for c in sets if not any(d < c for d in sets)]
    return tuple(sorted((tuple(sorted(c)) for c in kept), key=lambda c: (len(c), c)))


@dataclass(frozen=True)
class Face:
    conjuncts: tuple[Conjunct, ...]

    @property
    def names(self) -> frozenset[Name]:
        return frozenset(name for c in self.conjuncts for name, _ in c)

    def __str__(self) -> str:
        from app.kernel.pretty import pretty_face

        return pretty_face(self)


F0 = Face(())
F1 = Face(((),))


def face_atom(name: Name, bit: int) -> Face:
    return Face((((name, bit),),))


def face_join(phi: Face, psi: Face) -> Face:
    return Face(_normalize(phi.conjuncts + psi.conjuncts))


def face_meet(phi: Face, psi: Face) -> Face:
    return Face(_normalize(c + d for c in phi.conjuncts for d in psi.conjuncts))


def face_join_all(faces: Iterable[Face]) -> Face:
    return reduce(face_join, faces, F0)


def face_meet_all(faces: Iterable[Face]) -> Face:
    return reduce(face_meet, faces, F1)


def face_leq(phi: Face, psi: Face) -> bool:
    return all(any(set(d) <= set(c) for d in psi.conjuncts) for c in phi.conjuncts)


def face_eq(phi: Face, psi: Face) -> bool:
    return phi.conjuncts == psi.conjuncts


def face_is_one(phi: Face) -> bool:
    return phi == F1


def min_true_index(branches: Sequence) -> Optional[int]:
    """Least position whose face is 1; branches are (face, ...) tuples."""
    for k, branch in enumerate(branches):
        if face_is_one(branch[0]):
            return k
    return None


def disjunction_split(phi: Face, psi: Face) -> Split:
    if not face_is_one(face_join(phi, psi)):
        return Split.NEITHER
    return Split.LEFT if face_is_one(phi) else Split.RIGHT


def face_forall(name: Name, phi: Face) -> Face:
    return Face(tuple(c for c in phi.conjuncts if all(n != name for n, _ in c)))


def face_of_eq1(r: Interval) -> Face:
    """The face on which r = 1."""
    return Face(_normalize(tuple((name, 1 if pos else 0) for name, pos in clause) for clause in r.clauses))


def face_of_eq0(r: Interval) -> Face:
    return face_of_eq1(iv_rev(r))


def face_apply(phi: Face, mapping: Mapping[Name, Interval]) -> Face:
    """Apply a name assignment to a face; unmapped names stay."""
    if not mapping or not (phi.names & mapping.keys()):
        return phi

    def atom(name: Name, bit: int) -> Face:
        image = mapping.get(name)
        if image is None:
            return face_atom(name, bit)
        return face_of_eq1(image) if bit else face_of_eq0(image)

    return face_join_all(face_meet_all(atom(n, b) for n, b in c) for c in phi.conjuncts)


@dataclass(frozen=True)
class IrreducibleFace:
    """A single nonzero conjunct, read as a partial endpoint assignment."""

    atoms: Conjunct

    def __post_init__(self) -> None:
        if not self.atoms:
            raise FaceError("an irreducible face constrains at least one name")
        if not _consistent(frozenset(self.atoms)):
            raise FaceError("an irreducible face gives each name one endpoint")

    @property
    def face(self) -> Face:
        return Face((tuple(sorted(self.atoms)),))

    @property
    def assignment(self) -> dict[Name, int]:
        return dict(self.atoms)

    def __str__(self) -> str:
        return str(self.face)


def irreducibles_under(phi: Face) -> list[IrreducibleFace]:
    """
    The conjuncts of phi, as irreducible faces.

    For phi = 1 the single conjunct is empty; callers treat that case as
    "no names to eliminate" and use the identity substitution.
    """
    return [IrreducibleFace(c) for c in phi.conjuncts if c]


def face_restrictions(phi: Face, ctx: NameCtx) -> list[tuple[NameCtx, "NameSubst", Optional[IrreducibleFace]]]:
    """
    Every restriction-free context covering phi: one (I_alpha, alpha-bar)
    per irreducible alpha <= phi, or the identity when phi = 1.
    """
    from app.kernel.substitution import NameSubst

    if face_is_one(phi):
        return [(ctx, NameSubst.identity(ctx), None)]
    return [(*face_subst(alpha, ctx), alpha) for alpha in irreducibles_under(phi)]


def face_subst(alpha: IrreducibleFace, ctx: NameCtx) -> tuple[NameCtx, "NameSubst"]:
    """The context I_alpha skipping alpha's names, and alpha-bar : I_alpha -> I."""
    from app.kernel.substitution import NameSubst

    assignment = alpha.assignment
    missing = [str(n) for n in assignment if n not in ctx]
    if missing:
        raise FaceError(f"face mentions names outside the context: {', '.join(missing)}")
    restricted = ctx.without(assignment)
    images = {
        name: iv_const(assignment[name]) if name in assignment else iv_name(name) for name in ctx
    }
    return restricted, NameSubst(domain=ctx, codomain=restricted, images=images)
