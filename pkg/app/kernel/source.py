"""A parsed .ctt file: a name preamble and an ordered list of definitions."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from app.core.errors import DefinitionNotFound
from app.kernel.names import Name, NameCtx
from app.kernel.substitution import substitute
from app.kernel.syntax import Term


@dataclass(frozen=True)
class Definition:
    """name : ty = body; ty and body may mention earlier definitions as variables."""

    name: str
    ty: Term
    body: Term
    line: int = 0

    @property
    def var(self) -> Name:
        return Name(self.name)


@dataclass
class SourceFile:
    names: NameCtx
    definitions: tuple[Definition, ...]
    _closed: dict[str, tuple[Term, Term]] = field(default_factory=dict, repr=False)

    def __iter__(self) -> Iterator[Definition]:
        return iter(self.definitions)

    def __len__(self) -> int:
        return len(self.definitions)

    def __contains__(self, name: str) -> bool:
        return any(d.name == name for d in self.definitions)

    def get(self, name: str) -> Definition:
        for d in self.definitions:
            if d.name == name:
                return d
        raise DefinitionNotFound(f"no definition named {name!r}")

    def closed(self, name: str) -> tuple[Term, Term]:
        """(type, body) with every earlier definition unfolded."""
        target = self.get(name)
        if name in self._closed:
            return self._closed[name]
        earlier: dict[Name, Term] = {}
        for d in self.definitions:
            if d.name not in self._closed:
                self._closed[d.name] = (substitute(d.ty, vars_=earlier), substitute(d.body, vars_=earlier))
            if d is target:
                break
            earlier[d.var] = self._closed[d.name][1]
        return self._closed[name]

    def prefix(self, name: str) -> list[Definition]:
        """The definitions visible from `name`, in order."""
        out = []
        for d in self.definitions:
            if d.name == name:
                return out
            out.append(d)
        raise DefinitionNotFound(f"no definition named {name!r}")
