"""Two-valued states, separability, and states obtained from colorings.

A two-valued state gives exactly one vertex of every context the value 1.
Aggregation turns an admissible coloring into such a state by sending one
color to 1 and the rest to 0; sending colors to rational weights that sum to
1 gives a fractional state instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import kernels
from .coloring import Coloring, admissible_colorings, check_coloring
from .errors import (
    DomainMismatch,
    NoAdmissibleColoring,
    NotAdmissible,
    SearchBudgetExceeded,
    ValueMapNotNormalized,
)
from .hypergraph import Hypergraph, LogicBundle, uniformity


@dataclass(frozen=True)
class TwoValuedState:
    names: tuple[str, ...]
    values: tuple[int, ...]

    @classmethod
    def from_ones(cls, H: Hypergraph, ones) -> TwoValuedState:
        idx = set(H.indices(ones))
        return cls(H.names, tuple(int(v in idx) for v in range(H.n_vertices)))

    def ones(self) -> list[str]:
        return [n for n, x in zip(self.names, self.values) if x]

    def __getitem__(self, name: str) -> int:
        return self.values[self.names.index(name)]


@dataclass(frozen=True)
class RationalState:
    names: tuple[str, ...]
    values: tuple[Fraction, ...]

    @classmethod
    def from_mapping(cls, H: Hypergraph, mapping: Mapping[str, object]) -> RationalState:
        missing = [n for n in H.names if n not in mapping]
        if missing:
            raise DomainMismatch(f"state misses vertices {missing}")
        return cls(H.names, tuple(Fraction(mapping[n]) for n in H.names))

    def as_mapping(self) -> dict[str, Fraction]:
        return dict(zip(self.names, self.values))


def enumerate_states(H: Hypergraph, budget=None) -> list[TwoValuedState]:
    """All two-valued states, ordered lexicographically by bit vector."""
    uniformity(H)
    limit = kernels.node_budget(budget)
    masks, _, status = kernels.state_search(H.context_masks(), H.neighbor_masks(), limit)
    if status == kernels.BUDGET:
        raise SearchBudgetExceeded(f"state enumeration exceeded {limit} nodes")
    rows = [tuple(m >> v & 1 for v in range(H.n_vertices)) for m in masks]
    return [TwoValuedState(H.names, r) for r in sorted(rows)]


@dataclass
class StateCheck:
    valid: bool
    context_sums: list[int]

    def __bool__(self):
        return self.valid


def check_state(H: Hypergraph, values) -> StateCheck:
    """Exactly one 1 per context? ``values`` maps names to 0/1 or is a state."""
    if isinstance(values, TwoValuedState):
        values = dict(zip(values.names, values.values))
    missing = [n for n in H.names if n not in values]
    if missing:
        raise DomainMismatch(f"state misses vertices {missing}")
    sums = [sum(int(values[H.names[v]]) for v in ctx) for ctx in H.contexts]
    binary = all(values[n] in (0, 1) for n in H.names)
    return StateCheck(binary and all(s == 1 for s in sums), sums)


@dataclass
class SeparatingReport:
    separating: bool
    unseparated_pairs: list[tuple[str, str]]


def separating_report(H: Hypergraph, states: Sequence[TwoValuedState]) -> SeparatingReport:
    # column signature of each vertex across the states
    sig = [tuple(s.values[v] for s in states) for v in range(H.n_vertices)]
    bad = [
        (H.names[u], H.names[v])
        for u, v in combinations(range(H.n_vertices), 2)
        if sig[u] == sig[v]
    ]
    return SeparatingReport(not bad, bad)


def subset_value_profile(states: Sequence[TwoValuedState], subset: Sequence[str]) -> int:
    """Largest number of subset members valued 1 by a single state."""
    if not subset or not states:
        return 0
    best = 0
    for s in states:
        pos = {n: i for i, n in enumerate(s.names)}
        best = max(best, sum(s.values[pos[n]] for n in subset))
    return best


def _require_admissible(H: Hypergraph, c: Coloring):
    report = check_coloring(H, c)
    if not report.admissible:
        raise NotAdmissible(f"coloring is not admissible: {report.violations[:3]}")


def aggregate(H: Hypergraph, c: Coloring, color: int) -> TwoValuedState:
    """Two-valued state sending ``color`` to 1 and every other color to 0."""
    _require_admissible(H, c)
    if not 0 <= color < c.k:
        raise ValueError(f"color {color} outside 0..{c.k - 1}")
    return TwoValuedState(H.names, tuple(int(x == color) for x in c.assignment))


@dataclass
class AggregabilityReport:
    states: list[TwoValuedState]
    witnesses: list[tuple[Coloring, int] | None]
    colorings_searched: int = 0

    def aggregable(self) -> list[TwoValuedState]:
        return [s for s, w in zip(self.states, self.witnesses) if w is not None]

    def non_aggregable(self) -> list[TwoValuedState]:
        return [s for s, w in zip(self.states, self.witnesses) if w is None]

    def witness_for(self, state: TwoValuedState):
        return self.witnesses[self.states.index(state)]


def aggregability_report(H: Hypergraph, budget=None) -> AggregabilityReport:
    """Classify each two-valued state as the aggregate of some admissible coloring.

    Relabeling a coloring only permutes which class is sent to 1, so the
    canonical representatives cover every aggregate.
    """
    states = enumerate_states(H, budget=budget)
    reps = admissible_colorings(H, budget=budget)
    if not reps:
        raise NoAdmissibleColoring("the chromatic number exceeds the uniformity")
    found: dict[tuple[int, ...], tuple[Coloring, int]] = {}
    for c in reps:
        for color in range(c.k):
            key = tuple(int(x == color) for x in c.assignment)
            found.setdefault(key, (c, color))
    return AggregabilityReport(states, [found.get(s.values) for s in states], len(reps))


def normalize_value_map(m, k: int) -> tuple[Fraction, ...]:
    if isinstance(m, Mapping):
        vals = [Fraction(m.get(i, 0)) for i in range(k)]
        if any(not 0 <= i < k for i in m):
            raise ValueMapNotNormalized(f"value map names colors outside 0..{k - 1}")
    else:
        vals = [Fraction(x) for x in m]
        if len(vals) != k:
            raise ValueMapNotNormalized(f"value map has {len(vals)} entries for {k} colors")
    if any(not 0 <= x <= 1 for x in vals):
        raise ValueMapNotNormalized("values must lie in [0, 1]")
    if sum(vals) != 1:
        raise ValueMapNotNormalized(f"values sum to {sum(vals)}, not 1")
    return tuple(vals)


def fractional_state(H: Hypergraph, c: Coloring, m) -> RationalState:
    """Send each vertex to the weight of its color."""
    _require_admissible(H, c)
    vals = normalize_value_map(m, c.k)
    return RationalState(H.names, tuple(vals[x] for x in c.assignment))


@dataclass
class RationalStateCheck:
    valid: bool
    context_sums: list[Fraction]
    out_of_range: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.valid


def check_rational_state(H: Hypergraph, state: RationalState) -> RationalStateCheck:
    if tuple(state.names) != H.names:
        raise DomainMismatch("state and hypergraph have different vertices")
    bad = [n for n, x in zip(state.names, state.values) if not 0 <= x <= 1]
    sums = [sum((state.values[v] for v in ctx), Fraction(0)) for ctx in H.contexts]
    return RationalStateCheck(not bad and all(s == 1 for s in sums), sums, bad)


def fractional_reachable(H: Hypergraph, target: RationalState, k: int | None = None, budget=None):
    """A (coloring, value map) pair producing ``target``, or None.

    Every context of an admissible coloring shows all k colors, so the
    value map must reproduce each context's multiset of target values; the
    coloring then fixes the map completely.
    """
    n = uniformity(H)
    if k is None:
        k = n
    if k != n:
        raise ValueError("fractional states come from admissible colorings, so k must equal the uniformity")
    check = check_rational_state(H, target)
    if not check.valid:
        raise ValueError("target is not a valid rational state")
    multisets = {tuple(sorted(target.values[v] for v in ctx)) for ctx in H.contexts}
    if len(multisets) != 1:
        return None
    for c in admissible_colorings(H, budget=budget):
        m: dict[int, Fraction] = {}
        ok = True
        for v, color in enumerate(c.assignment):
            val = target.values[v]
            if m.setdefault(color, val) != val:
                ok = False
                break
        if ok:
            vals = tuple(m.get(i, Fraction(0)) for i in range(k))
            if sum(vals) == 1:
                return c, vals
    return None


def middle_state(bundle: LogicBundle, states: Sequence[TwoValuedState]) -> int:
    """Index of the unique state that is 0 on every cycle vertex."""
    if bundle.cycle is None:
        raise ValueError(f"logic {bundle.name!r} has no cycle metadata")
    cyc = set(bundle.cycle)
    hits = [i for i, s in enumerate(states) if not any(x for n, x in zip(s.names, s.values) if n in cyc)]
    if len(hits) != 1:
        raise ValueError(f"expected one state avoiding the cycle, found {len(hits)}")
    return hits[0]
