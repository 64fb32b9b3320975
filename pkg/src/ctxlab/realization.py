"""Exact orthogonal representations: vertices labelled by rays.

Rays are stored as primitive integer tuples (content 1, first nonzero entry
positive), so two vectors spanning the same line compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping, Sequence

from .errors import CollinearInput, DomainMismatch, WrongDimension, ZeroVector
from .hypergraph import Hypergraph

Ray = tuple[int, ...]


def canonical_ray(coords: Sequence) -> Ray:
    """Scale a nonzero rational vector to its primitive integer representative.

    >>> canonical_ray([0, 2, -2])
    (0, 1, -1)
    >>> canonical_ray([Fraction(1, 2), 0, Fraction(1, 2)])
    (1, 0, 1)
    """
    fr = [Fraction(c) for c in coords]
    if not any(fr):
        raise ZeroVector("the zero vector spans no ray")
    den = lcm(*(f.denominator for f in fr))
    ints = [int(f * den) for f in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def cross_complete(a: Sequence[int], b: Sequence[int]) -> Ray:
    """The ray orthogonal to two non-collinear rays in dimension 3."""
    if len(a) != 3 or len(b) != 3:
        raise WrongDimension("cross-product completion needs dimension 3")
    c = (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )
    if not any(c):
        raise CollinearInput(f"{tuple(a)} and {tuple(b)} are collinear")
    return canonical_ray(c)


@dataclass(frozen=True)
class Realization:
    dimension: int
    rays: Mapping[str, Ray]

    def covers(self, H: Hypergraph) -> bool:
        return all(n in self.rays for n in H.names)


def complete_realization(H: Hypergraph, rays: Mapping[str, Sequence], dimension: int = 3) -> Realization:
    """Fill in missing rays of a 3-uniform logic by cross products.

    A vertex gets a ray as soon as the other two members of one of its
    contexts carry rays; contexts are scanned in input order until nothing
    changes. Vertices that remain unlabelled are left out.
    """
    if dimension != 3:
        raise WrongDimension("completion is only defined in dimension 3")
    known = {n: canonical_ray(r) for n, r in rays.items()}
    changed = True
    while changed:
        changed = False
        for ci in range(H.n_contexts):
            members = H.context_names(ci)
            missing = [n for n in members if n not in known]
            if len(missing) == 1 and len(members) == 3:
                a, b = (known[n] for n in members if n != missing[0])
                known[missing[0]] = cross_complete(a, b)
                changed = True
    ordered = {n: known[n] for n in H.names if n in known}
    return Realization(dimension, ordered)


@dataclass
class RealizationReport:
    context_violations: list = field(default_factory=list)
    rank_violations: list = field(default_factory=list)
    duplicate_rays: list = field(default_factory=list)
    faithful_checked: bool = False
    faithfulness_exceptions: list = field(default_factory=list)

    @property
    def contexts_ok(self) -> bool:
        return not self.context_violations and not self.rank_violations

    @property
    def ok(self) -> bool:
        return self.contexts_ok and not self.duplicate_rays

    @property
    def faithful(self) -> bool | None:
        if not self.faithful_checked:
            return None
        return not self.faithfulness_exceptions


def _rank(rows: list[Sequence[int]]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                f = m[i][col] / m[rank][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def verify_realization(H: Hypergraph, R: Realization, faithful: bool = False) -> RealizationReport:
    """Check exact orthogonality and rank within every context.

    With ``faithful`` set, also list every pair of vertices that share no
    context but whose rays are orthogonal anyway.
    """
    missing = [n for n in H.names if n not in R.rays]
    if missing:
        raise DomainMismatch(f"no ray for vertices {missing}")
    bad_dim = [n for n in H.names if len(R.rays[n]) != R.dimension]
    if bad_dim:
        raise DomainMismatch(f"rays of {bad_dim} do not have dimension {R.dimension}")
    report = RealizationReport()
    for ci, ctx in enumerate(H.contexts):
        vecs = [R.rays[H.names[v]] for v in ctx]
        for i in range(len(ctx)):
            for j in range(i + 1, len(ctx)):
                ip = dot(vecs[i], vecs[j])
                if ip != 0:
                    report.context_violations.append(
                        (ci, H.names[ctx[i]], H.names[ctx[j]], ip)
                    )
        if len(ctx) != R.dimension or _rank(vecs) != R.dimension:
            report.rank_violations.append((ci, _rank(vecs)))
    seen: dict[Ray, str] = {}
    for n in H.names:
        r = canonical_ray(R.rays[n])
        if r in seen:
            report.duplicate_rays.append((seen[r], n))
        else:
            seen[r] = n
    if faithful:
        report.faithful_checked = True
        for u in range(H.n_vertices):
            for v in range(u + 1, H.n_vertices):
                if H.share_context(u, v):
                    continue
                if dot(R.rays[H.names[u]], R.rays[H.names[v]]) == 0:
                    report.faithfulness_exceptions.append((H.names[u], H.names[v]))
    return report
