"""
Face oracle: faces read as sets of partial endpoint assignments.

A partial assignment sends some names to 0 or 1 and leaves the rest
unassigned; an atom (i=b) holds when i is assigned b. phi <= psi iff psi
holds at every partial assignment where phi holds.
"""
import itertools
from typing import Iterable, Iterator, Mapping

from app.kernel.faces import Face
from app.kernel.names import Name


def holds(phi: Face, sigma: Mapping[Name, int]) -> bool:
    return any(all(sigma.get(name) == bit for name, bit in c) for c in phi.conjuncts)


def partial_assignments(names: Iterable[Name]) -> Iterator[dict[Name, int]]:
    names = sorted(set(names))
    for values in itertools.product((None, 0, 1), repeat=len(names)):
        yield {n: v for n, v in zip(names, values) if v is not None}


def leq(phi: Face, psi: Face) -> bool:
    return all(holds(psi, s) for s in partial_assignments(phi.names | psi.names) if holds(phi, s))


def equal(phi: Face, psi: Face) -> bool:
    return leq(phi, psi) and leq(psi, phi)


def is_one(phi: Face) -> bool:
    return holds(phi, {})
