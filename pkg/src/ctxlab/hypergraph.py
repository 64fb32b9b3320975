"""Hypergraph data model for finite quantum logics.

A logic is given by its contexts (hyperedges). Vertices are named atoms and
are indexed in order of first appearance in the context list; every
enumeration order elsewhere in the package is derived from that indexing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Sequence

from .errors import (
    DuplicateContext,
    DuplicateVertexInContext,
    EmptyContext,
    InvalidName,
    NonUniform,
    UnknownVertex,
)

if TYPE_CHECKING:
    from .realization import Realization

# Characters reserved by the text format and the CLI list syntax.
_NAME_RE = re.compile(r"^[^\s\[\]#,=()]+$")


def check_name(name: str) -> str:
    if not isinstance(name, str) or not _NAME_RE.match(name) or not name.isprintable():
        raise InvalidName(f"invalid vertex name {name!r}")
    return name


@dataclass(frozen=True)
class Hypergraph:
    """Vertex names plus contexts stored as tuples of vertex indices."""

    names: tuple[str, ...]
    contexts: tuple[tuple[int, ...], ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    @property
    def n_vertices(self) -> int:
        return len(self.names)

    @property
    def n_contexts(self) -> int:
        return len(self.contexts)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def indices(self, names: Iterable[str]) -> list[int]:
        return [self.index(n) for n in names]

    def context_names(self, i: int) -> tuple[str, ...]:
        return tuple(self.names[v] for v in self.contexts[i])

    def uniformity(self) -> int:
        return uniformity(self)

    def vertex_contexts(self) -> list[list[int]]:
        """For each vertex, the indices of the contexts containing it."""
        out: list[list[int]] = [[] for _ in self.names]
        for ci, ctx in enumerate(self.contexts):
            for v in ctx:
                out[v].append(ci)
        return out

    def neighbor_masks(self) -> list[int]:
        """Bitmask of co-context vertices for each vertex (self excluded)."""
        return list(self._neighbors)

    @cached_property
    def _neighbors(self) -> tuple[int, ...]:
        masks = [0] * self.n_vertices
        for ctx in self.contexts:
            m = 0
            for v in ctx:
                m |= 1 << v
            for v in ctx:
                masks[v] |= m & ~(1 << v)
        return tuple(masks)

    def context_masks(self) -> list[int]:
        out = []
        for ctx in self.contexts:
            m = 0
            for v in ctx:
                m |= 1 << v
            out.append(m)
        return out

    def share_context(self, u: int, v: int) -> bool:
        return bool(self._neighbors[u] >> v & 1)


@dataclass(frozen=True)
class LogicBundle:
    """A hypergraph together with optional rays and descriptive metadata."""

    hypergraph: Hypergraph
    realization: Realization | None = None
    name: str = ""
    aliases: tuple[str, ...] = ()
    cycle: tuple[str, ...] | None = None
    notes: str = ""

    def cycle_indices(self) -> list[int] | None:
        if self.cycle is None:
            return None
        return self.hypergraph.indices(self.cycle)


def build_hypergraph(contexts: Sequence[Sequence[str]]) -> Hypergraph:
    """Build a hypergraph from a list of contexts given by vertex names.

    Raises EmptyContext for contexts with fewer than two members,
    DuplicateVertexInContext when a name repeats inside one context and
    DuplicateContext when two contexts have the same member set.
    """
    names: list[str] = []
    index: dict[str, int] = {}
    seen: dict[frozenset, int] = {}
    out: list[tuple[int, ...]] = []
    for ci, ctx in enumerate(contexts):
        ctx = list(ctx)
        if len(ctx) == 0:
            raise EmptyContext(f"context {ci} is empty")
        if len(ctx) < 2:
            raise EmptyContext(f"context {ci} has fewer than 2 members")
        if len(set(ctx)) != len(ctx):
            dup = next(n for n in ctx if ctx.count(n) > 1)
            raise DuplicateVertexInContext(f"vertex {dup!r} repeated in context {ci}")
        members = []
        for n in ctx:
            check_name(n)
            if n not in index:
                index[n] = len(names)
                names.append(n)
            members.append(index[n])
        key = frozenset(members)
        if key in seen:
            raise DuplicateContext(f"context {ci} duplicates context {seen[key]}")
        seen[key] = ci
        out.append(tuple(members))
    return Hypergraph(tuple(names), tuple(out))


def uniformity(H: Hypergraph) -> int:
    """Common context length; raises NonUniform listing the odd contexts out."""
    if not H.contexts:
        raise NonUniform("hypergraph has no contexts")
    lengths = [len(c) for c in H.contexts]
    n = max(set(lengths), key=lambda x: (lengths.count(x), -x))
    bad = [i for i, length in enumerate(lengths) if length != n]
    if bad:
        raise NonUniform(
            f"contexts {bad} differ from the majority length {n}", offending=bad
        )
    return n


@dataclass(frozen=True)
class IncidenceProfile:
    degrees: dict[str, int]
    intertwiners: tuple[str, ...]


def incidence_profile(H: Hypergraph) -> IncidenceProfile:
    deg = [0] * H.n_vertices
    for ctx in H.contexts:
        for v in ctx:
            deg[v] += 1
    return IncidenceProfile(
        degrees={H.names[v]: d for v, d in enumerate(deg)},
        intertwiners=tuple(H.names[v] for v, d in enumerate(deg) if d >= 2),
    )
