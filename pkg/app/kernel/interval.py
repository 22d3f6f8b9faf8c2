"""
The free De Morgan algebra on a set of names.

An element is kept as an irredundant join of meets of literals, a literal
being a name or its reversal. The free De Morgan algebra on X is the free
bounded distributive lattice on X + X', so this normal form is unique and
equality is identity of normal forms. i /\\ ~i is not collapsed: there is
no complement law.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping

from app.kernel.names import Name

# (name, positive); (i, False) stands for 1 - i
Literal = tuple[Name, bool]
Clause = tuple[Literal, ...]


class Endpoint(str, enum.Enum):
    IS0 = "Is0"
    IS1 = "Is1"
    NEITHER = "Neither"


def _normalize(clauses: Iterable[Iterable[Literal]]) -> tuple[Clause, ...]:
    sets = {frozenset(c) for c in clauses}
    kept = [c for c in sets if not any(d < c for d in sets)]
    return tuple(sorted((tuple(sorted(c)) for c in kept), key=lambda c: (len(c), c)))


@dataclass(frozen=True)
class Interval:
    clauses: tuple[Clause, ...]

    @property
    def names(self) -> frozenset[Name]:
        return frozenset(name for clause in self.clauses for name, _ in clause)

    def __str__(self) -> str:
        from app.kernel.pretty import pretty_interval

        return pretty_interval(self)


I0 = Interval(())
I1 = Interval(((),))


def iv_name(name: Name) -> Interval:
    return Interval((((name, True),),))


def iv_const(bit: int) -> Interval:
    return I1 if bit else I0


def iv_join(a: Interval, b: Interval) -> Interval:
    return Interval(_normalize(a.clauses + b.clauses))


def iv_meet(a: Interval, b: Interval) -> Interval:
    return Interval(_normalize(ca + cb for ca in a.clauses for cb in b.clauses))


def iv_rev(a: Interval) -> Interval:
    # ~(\/ /\ l) = /\ \/ ~l, redistributed into a join of meets
    conjuncts = (
        Interval(_normalize(((name, not pos),) for name, pos in clause)) for clause in a.clauses
    )
    return reduce(iv_meet, conjuncts, I1)


def iv_eq(a: Interval, b: Interval) -> bool:
    return a.clauses == b.clauses


def iv_is_end(a: Interval) -> Endpoint:
    if a == I0:
        return Endpoint.IS0
    if a == I1:
        return Endpoint.IS1
    return Endpoint.NEITHER


def iv_subst(a: Interval, mapping: Mapping[Name, Interval]) -> Interval:
    """Replace names by interval elements; unmapped names stay."""
    if not mapping or not (a.names & mapping.keys()):
        return a

    def literal(name: Name, pos: bool) -> Interval:
        image = mapping.get(name)
        if image is None:
            return Interval((((name, pos),),))
        return image if pos else iv_rev(image)

    return reduce(
        iv_join,
        (reduce(iv_meet, (literal(n, p) for n, p in clause), I1) for clause in a.clauses),
        I0,
    )
