"""Exclusive and admissible colorings of uniform hypergraphs.

A coloring is exclusive when no context repeats a color and complete when
every context shows all k colors; admissible means both. For an n-uniform
logic an admissible coloring exists exactly when the chromatic number is n.

Searches run on the co-context graph through :mod:`ctxlab.kernels`. Results
are returned in canonical form: the first context carries colors 0..n-1 in
member order, and every further color first appears (by vertex index) after
all smaller ones.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Mapping

from . import kernels
from .errors import (
    DomainMismatch,
    ExceedsKMax,
    NoAdmissibleColoring,
    SearchBudgetExceeded,
)
from .hypergraph import Hypergraph, uniformity


@dataclass(frozen=True)
class Coloring:
    """Color index per vertex (by vertex index), with k colors available."""

    assignment: tuple[int, ...]
    k: int

    @classmethod
    def from_mapping(cls, H: Hypergraph, mapping: Mapping[str, int], k: int) -> Coloring:
        missing = [n for n in H.names if n not in mapping]
        if missing:
            raise DomainMismatch(f"coloring misses vertices {missing}")
        extra = [n for n in mapping if n not in H._index]
        if extra:
            raise DomainMismatch(f"coloring names unknown vertices {extra}")
        return cls(tuple(int(mapping[n]) for n in H.names), k)

    def as_mapping(self, H: Hypergraph) -> dict[str, int]:
        return dict(zip(H.names, self.assignment))

    def color_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.assignment):
            classes[c].append(v)
        return classes

    def colors_used(self) -> int:
        return len(set(self.assignment))


@dataclass
class ColoringReport:
    exclusive: bool
    complete: bool
    equitable: bool
    class_sizes: list[int]
    violations: list = field(default_factory=list)

    @property
    def admissible(self) -> bool:
        return self.exclusive and self.complete


def check_coloring(H: Hypergraph, c: Coloring) -> ColoringReport:
    if len(c.assignment) != H.n_vertices:
        raise DomainMismatch(
            f"coloring has {len(c.assignment)} entries for {H.n_vertices} vertices"
        )
    if any(not 0 <= x < c.k for x in c.assignment):
        raise DomainMismatch(f"color index outside 0..{c.k - 1}")
    violations = []
    exclusive = complete = True
    for ci, ctx in enumerate(H.contexts):
        colors = [c.assignment[v] for v in ctx]
        repeated = sorted(x for x, m in Counter(colors).items() if m > 1)
        if repeated:
            exclusive = False
            violations.append((ci, f"repeated colors {repeated}"))
        missing = sorted(set(range(c.k)) - set(colors))
        if missing:
            complete = False
            violations.append((ci, f"missing colors {missing}"))
    sizes = [0] * c.k
    for x in c.assignment:
        sizes[x] += 1
    equitable = len(set(sizes)) <= 1
    if not equitable:
        violations.extend(("class", (col, n)) for col, n in enumerate(sizes))
    return ColoringReport(exclusive, complete, equitable, sizes, violations)


def canonicalize(H: Hypergraph, assignment) -> tuple[int, ...]:
    """Relabel colors into the canonical representative of the orbit."""
    relabel: dict[int, int] = {}
    order = list(H.contexts[0]) + list(range(H.n_vertices)) if H.contexts else []
    for v in order:
        x = assignment[v]
        if x not in relabel:
            relabel[x] = len(relabel)
    return tuple(relabel[x] for x in assignment)


def _search(H: Hypergraph, k: int, *, symmetric: bool, max_solutions: int, budget=None):
    n = len(H.contexts[0])
    pre = [-1] * H.n_vertices
    if symmetric:
        for color, v in enumerate(H.contexts[0]):
            pre[v] = color
    sols, nodes, status = kernels.color_search(
        H.neighbor_masks(),
        H.context_masks(),
        k,
        pre,
        break_symmetry=symmetric,
        max_solutions=max_solutions,
        node_limit=kernels.node_budget(budget),
    )
    if status == kernels.BUDGET:
        raise SearchBudgetExceeded(
            f"coloring search with k={k} exceeded {kernels.node_budget(budget)} nodes"
        )
    return sols, nodes, n


def find_coloring(H: Hypergraph, k: int, require_complete: bool | None = None, budget=None) -> Coloring | None:
    """An exclusive coloring with at most k colors, or None after exhaustive search.

    ``require_complete`` defaults to True when k equals the uniformity and
    False otherwise; completeness with more colors than context members is
    impossible, so asking for it returns None.
    """
    n = uniformity(H)
    if require_complete is None:
        require_complete = k == n
    if k < n or (require_complete and k > n):
        return None
    sols, _, _ = _search(H, k, symmetric=True, max_solutions=1, budget=budget)
    if not sols:
        return None
    return Coloring(canonicalize(H, sols[0]), k)


@dataclass
class ChromaticReport:
    chromatic_number: int
    witness: Coloring | None
    exhausted: list[int]
    nodes: dict[int, int]


def chromatic_number(H: Hypergraph, k_max: int | None = None, budget=None) -> ChromaticReport:
    """Smallest k admitting an exclusive coloring, with witness and certificates.

    ``exhausted`` lists every k below the answer whose search finished
    without a solution. Raises ExceedsKMax when no k up to k_max works.
    """
    if not H.contexts:
        return ChromaticReport(0, Coloring((), 0), [], {})
    n = uniformity(H)
    if k_max is None:
        k_max = n + 3
    exhausted: list[int] = []
    nodes: dict[int, int] = {}
    for k in range(n, k_max + 1):
        sols, count, _ = _search(H, k, symmetric=True, max_solutions=1, budget=budget)
        nodes[k] = count
        if sols:
            return ChromaticReport(k, Coloring(canonicalize(H, sols[0]), k), exhausted, nodes)
        exhausted.append(k)
    raise ExceedsKMax(f"no exclusive coloring with at most {k_max} colors")


def enumerate_colorings(
    H: Hypergraph,
    k: int,
    up_to_relabeling: bool = True,
    budget=None,
    max_vertices: int = 64,
    max_colors: int = 6,
) -> Iterator[Coloring]:
    """Every exclusive k-coloring, or one canonical member per relabeling orbit.

    Output is sorted by assignment vector, so repeated runs agree.
    """
    n = uniformity(H)
    if H.n_vertices > max_vertices or k > max_colors:
        raise SearchBudgetExceeded(
            f"enumeration guarded at {max_vertices} vertices and {max_colors} colors"
        )
    if k < n:
        return
    sols, _, _ = _search(H, k, symmetric=up_to_relabeling, max_solutions=0, budget=budget)
    if up_to_relabeling:
        sols = [canonicalize(H, s) for s in sols]
    for s in sorted(sols):
        yield Coloring(tuple(s), k)


def admissible_colorings(H: Hypergraph, budget=None) -> list[Coloring]:
    """Canonical representatives of all admissible colorings (k = uniformity)."""
    n = uniformity(H)
    return list(enumerate_colorings(H, n, True, budget=budget, max_colors=max(6, n)))


def orbit_size(c: Coloring) -> int:
    """Number of colorings obtained from c by permuting the k colors."""
    size = 1
    for i in range(c.colors_used()):
        size *= c.k - i
    return size


@dataclass
class SeparationReport:
    separated: dict[tuple[str, str], bool]

    def unseparated(self) -> list[tuple[str, str]]:
        return [p for p, s in self.separated.items() if not s]


def chromatic_separation(H: Hypergraph, budget=None) -> SeparationReport:
    """Mark each vertex pair separated if some admissible coloring tells them apart."""
    reps = admissible_colorings(H, budget=budget)
    if not reps:
        raise NoAdmissibleColoring("the chromatic number exceeds the uniformity")
    out = {}
    for u, v in combinations(range(H.n_vertices), 2):
        out[(H.names[u], H.names[v])] = any(c.assignment[u] != c.assignment[v] for c in reps)
    return SeparationReport(out)


def chromatically_separated(H: Hypergraph, u: str, v: str, budget=None) -> bool:
    if u == v:
        raise ValueError("separation is defined for distinct vertices only")
    iu, iv = H.index(u), H.index(v)
    reps = admissible_colorings(H, budget=budget)
    if not reps:
        raise NoAdmissibleColoring("the chromatic number exceeds the uniformity")
    return any(c.assignment[iu] != c.assignment[iv] for c in reps)
