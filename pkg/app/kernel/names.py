"""Names for interval directions and term variables, plus name contexts."""
from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator

from app.core.errors import FaceError

_counter = itertools.count(1)
_lock = threading.Lock()


@dataclass(frozen=True, order=True)
class Name:
    """
    An identifier with a freshness counter.

    Names read from source have counter 0; fresh() hands out strictly
    increasing counters, so a fresh name never equals a name that already
    occurs anywhere.
    """

    ident: str
    counter: int = 0

    def __str__(self) -> str:
        return self.ident if self.counter == 0 else f"{self.ident}'{self.counter}"

    def __repr__(self) -> str:
        return f"Name({str(self)!r})"


def fresh(hint: "Name | str" = "x") -> Name:
    ident = hint.ident if isinstance(hint, Name) else hint
    with _lock:
        n = next(_counter)
    return Name(ident, n)


@dataclass(frozen=True)
class NameCtx:
    """An ordered context of distinct interval names."""

    names: tuple[Name, ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.names)) != len(self.names):
            raise FaceError(f"duplicate names in context: {[str(n) for n in self.names]}")

    @classmethod
    def of(cls, *names: "Name | str") -> "NameCtx":
        return cls(tuple(n if isinstance(n, Name) else Name(n) for n in names))

    def __iter__(self) -> Iterator[Name]:
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.names

    def extend(self, name: Name) -> "NameCtx":
        return NameCtx(self.names + (name,))

    def without(self, drop: Iterable[Name]) -> "NameCtx":
        dropped = set(drop)
        return NameCtx(tuple(n for n in self.names if n not in dropped))

    def __str__(self) -> str:
        return "[" + ", ".join(str(n) for n in self.names) + "]"
