"""Correlation polytopes of two-valued states, with exact facet enumeration.

States are mapped to rational points (probabilities of single vertices, or
products of +-1 observables on vertex pairs). The convex hull of those points
is converted to an H-representation by the double description method over
the integers, after restricting to the affine hull. Every inequality is kept
in the form ``normal . x >= bound`` with a primitive integer ``(normal,
bound)``; facet normals are reduced to the direction space of the affine
hull, so each facet has exactly one representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import ScaleBudgetExceeded, UnknownVertex
from .states import TwoValuedState

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class CoordinateSpec:
    """``probability`` over vertices, or ``pair_product`` over vertex pairs."""

    kind: str
    vertices: tuple[str, ...] = ()
    pairs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.kind not in ("probability", "pair_product"):
            raise ValueError(f"unknown coordinate kind {self.kind!r}")
        if self.kind == "pair_product" and len(set(self.pairs)) != len(self.pairs):
            raise ValueError("coordinate pairs must be distinct")

    @classmethod
    def probability(cls, vertices) -> CoordinateSpec:
        return cls("probability", vertices=tuple(vertices))

    @classmethod
    def pair_product(cls, pairs) -> CoordinateSpec:
        return cls("pair_product", pairs=tuple(tuple(p) for p in pairs))

    @property
    def arity(self) -> int:
        return len(self.vertices) if self.kind == "probability" else len(self.pairs)

    def labels(self) -> list[str]:
        if self.kind == "probability":
            return [f"p({v})" for v in self.vertices]
        return [f"A({u},{v})" for u, v in self.pairs]


@dataclass
class CoordinateImage:
    points: list[Point]
    sources: list[list[int]]  # state indices mapped to each point


def evaluate_coordinates(states: Sequence[TwoValuedState], spec: CoordinateSpec) -> CoordinateImage:
    """Deduplicated coordinate points of the states, with back-references.

    Observables use A = 1 - 2s, so a vertex valued 1 reads as -1.
    """
    points: list[Point] = []
    sources: list[list[int]] = []
    where: dict[Point, int] = {}
    for si, s in enumerate(states):
        pos = {n: i for i, n in enumerate(s.names)}

        def val(name):
            try:
                return s.values[pos[name]]
            except KeyError:
                raise UnknownVertex(f"unknown vertex {name!r}") from None

        if spec.kind == "probability":
            p = tuple(Fraction(val(v)) for v in spec.vertices)
        else:
            p = tuple(Fraction((1 - 2 * val(u)) * (1 - 2 * val(v))) for u, v in spec.pairs)
        if p in where:
            sources[where[p]].append(si)
        else:
            where[p] = len(points)
            points.append(p)
            sources.append([si])
    return CoordinateImage(points, sources)


@dataclass(frozen=True)
class LinearInequality:
    normal: tuple[int, ...]
    bound: int
    sense: str = "ge"

    def value(self, x) -> Fraction:
        return sum((Fraction(a) * Fraction(b) for a, b in zip(self.normal, x)), Fraction(0))

    def satisfied(self, x) -> bool:
        return self.value(x) >= self.bound

    def tight(self, x) -> bool:
        return self.value(x) == self.bound

    def __str__(self):
        terms = " ".join(f"{a:+d}*x{i}" for i, a in enumerate(self.normal) if a)
        return f"{terms or '0'} >= {self.bound}"


def canonical_inequality(normal: Sequence, bound) -> LinearInequality:
    """Scale ``normal . x >= bound`` by a positive factor to primitive integers."""
    vals = [Fraction(a) for a in normal] + [Fraction(bound)]
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g:
        ints = [x // g for x in ints]
    return LinearInequality(tuple(ints[:-1]), ints[-1])


def _canonical_equality(normal: Sequence, rhs) -> LinearInequality:
    ineq = canonical_inequality(normal, rhs)
    lead = next((a for a in ineq.normal if a), 0)
    if lead < 0:
        ineq = LinearInequality(tuple(-a for a in ineq.normal), -ineq.bound)
    return ineq


# exact linear algebra


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    m = [[Fraction(x) for x in r] for r in rows]
    pivots: list[int] = []
    ncols = len(m[0]) if m else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def _solve_square(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    n = len(a)
    aug = [list(a[i]) + [b[i]] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("singular system")
    return [red[i][n] for i in range(n)]


@dataclass
class AffineHull:
    dimension: int
    ambient: int
    equalities: list[LinearInequality]  # each read as normal . x == bound
    base: Point | None = None
    pivots: list[int] = field(default_factory=list)


def affine_hull(points: Sequence[Sequence]) -> AffineHull:
    """Exact affine dimension and a canonical basis of affine equalities."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        raise ValueError("affine hull of an empty set")
    d = len(pts[0])
    x0 = pts[0]
    diffs = [[a - b for a, b in zip(p, x0)] for p in pts[1:]]
    diffs = [r for r in diffs if any(r)]
    if diffs:
        red, pivots = rref(diffs)
    else:
        red, pivots = [], []
    normals = nullspace(red, d)
    if normals:
        normals, _ = rref(normals)
    eqs = [
        _canonical_equality(a, sum((x * y for x, y in zip(a, x0)), Fraction(0)))
        for a in normals
    ]
    return AffineHull(len(pivots), d, eqs, x0, pivots)


@dataclass
class PolytopeHRep:
    equalities: list[LinearInequality]  # both orientations of every equality
    facets: list[LinearInequality]
    dimension: int
    ambient: int

    def equality_rows(self) -> list[LinearInequality]:
        """One orientation per equality (first nonzero normal entry positive)."""
        return [e for e in self.equalities if next(a for a in e.normal if a) > 0]


def _primitive(vec: Sequence[int]) -> list[int]:
    g = 0
    for x in vec:
        g = gcd(g, x)
    return [x // g for x in vec] if g > 1 else list(vec)


def _int_row(row: Sequence[Fraction]) -> list[int]:
    den = lcm(*(x.denominator for x in row))
    return [int(x * den) for x in row]


def extreme_rays(rows: list[list[int]], ray_budget: int = 200_000) -> list[list[int]]:
    """Extreme rays of the pointed cone {y : row . y >= 0 for every row}.

    Double description with the combinatorial adjacency test. ``rows`` must
    have full column rank.
    """
    m = len(rows[0])
    red, pivots = [], []
    chosen: list[int] = []
    for i, r in enumerate(rows):
        trial, tp = rref(red + [r]) if red else rref([r])
        if len(tp) > len(pivots):
            red, pivots = trial, tp
            chosen.append(i)
            if len(chosen) == m:
                break
    if len(chosen) < m:
        raise ValueError("constraint rows do not have full column rank")
    # columns of the inverse of the chosen rows are the initial rays
    basis = [[Fraction(x) for x in rows[i]] for i in chosen]
    rays: list[tuple[list[int], int]] = []
    for j in range(m):
        e = [Fraction(int(i == j)) for i in range(m)]
        col = _solve_square(basis, e)
        vec = _primitive(_int_row(col))
        zero = 0
        for t, i in enumerate(chosen):
            if t != j:
                zero |= 1 << i
        rays.append((vec, zero))
    done = 0
    for i in chosen:
        done |= 1 << i
    for i, row in enumerate(rows):
        if done >> i & 1:
            continue
        ev = [sum(a * b for a, b in zip(row, vec)) for vec, _ in rays]
        pos = [k for k, s in enumerate(ev) if s > 0]
        neg = [k for k, s in enumerate(ev) if s < 0]
        new: list[tuple[list[int], int]] = []
        for p in pos:
            for q in neg:
                common = rays[p][1] & rays[q][1]
                if common.bit_count() < m - 2:
                    continue
                if any(
                    t != p and t != q and (rays[t][1] & common) == common
                    for t in range(len(rays))
                ):
                    continue
                sp, sq = ev[p], ev[q]
                vec = _primitive([sp * b - sq * a for a, b in zip(rays[p][0], rays[q][0])])
                new.append((vec, common | 1 << i))
        kept = [
            (vec, zero | (1 << i if ev[k] == 0 else 0))
            for k, (vec, zero) in enumerate(rays)
            if ev[k] >= 0
        ]
        rays = kept + new
        done |= 1 << i
        if len(rays) > ray_budget:
            raise ScaleBudgetExceeded(f"more than {ray_budget} intermediate rays")
    return [vec for vec, _ in rays]


def facet_enumeration(
    points: Sequence[Sequence],
    max_points: int = 64,
    max_dim: int = 12,
) -> PolytopeHRep:
    """Exact H-representation of the convex hull of ``points``."""
    pts = list(dict.fromkeys(tuple(Fraction(x) for x in p) for p in points))
    if not pts:
        raise ValueError("facet enumeration needs at least one point")
    if len(pts) > max_points or len(pts[0]) > max_dim:
        raise ScaleBudgetExceeded(
            f"{len(pts)} points in dimension {len(pts[0])} exceed the limits "
            f"({max_points} points, dimension {max_dim})"
        )
    hull = affine_hull(pts)
    equalities = []
    for e in hull.equalities:
        equalities.append(e)
        equalities.append(LinearInequality(tuple(-a for a in e.normal), -e.bound))
    dp = hull.dimension
    facets: list[LinearInequality] = []
    if dp > 0:
        rows = [_int_row([p[c] for c in hull.pivots] + [Fraction(-1)]) for p in pts]
        for ray in extreme_rays(rows):
            a_proj, b = ray[:-1], ray[-1]
            if not any(a_proj):
                continue
            normal = [Fraction(0)] * hull.ambient
            for c, a in zip(hull.pivots, a_proj):
                normal[c] = Fraction(a)
            facets.append(_reduce_to_direction_space(normal, Fraction(b), hull))
    facets = sorted(set(facets), key=lambda f: (f.normal, f.bound))
    return PolytopeHRep(equalities, facets, dp, hull.ambient)


def _reduce_to_direction_space(normal, bound, hull: AffineHull) -> LinearInequality:
    """Subtract the equality-normal component so the normal is canonical."""
    eqs = hull.equalities
    if eqs:
        e = [[Fraction(x) for x in q.normal] for q in eqs]
        gram = [[sum(a * b for a, b in zip(r, s)) for s in e] for r in e]
        rhs = [sum(a * b for a, b in zip(r, normal)) for r in e]
        lam = _solve_square(gram, rhs)
        for coef, r, q in zip(lam, e, eqs):
            normal = [a - coef * b for a, b in zip(normal, r)]
            bound -= coef * q.bound
    return canonical_inequality(normal, bound)


@dataclass
class HRepCheck:
    sound: bool
    tightness: list[int]
    violations: list = field(default_factory=list)


def verify_hrep(points: Sequence[Sequence], hrep: PolytopeHRep) -> HRepCheck:
    """Check that every point satisfies every equality and facet; count tight points."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    violations = []
    for e in hrep.equalities:
        for i, p in enumerate(pts):
            if not e.satisfied(p):
                violations.append(("equality", str(e), i))
    tightness = []
    for f in hrep.facets:
        count = 0
        for i, p in enumerate(pts):
            if not f.satisfied(p):
                violations.append(("facet", str(f), i))
            elif f.tight(p):
                count += 1
        tightness.append(count)
    return HRepCheck(not violations, tightness, violations)


def vertices_from_hrep(points: Sequence[Sequence], hrep: PolytopeHRep) -> list[Point]:
    """Points of the input that are vertices of the polytope described by hrep."""
    pts = list(dict.fromkeys(tuple(Fraction(x) for x in p) for p in points))
    out = []
    for p in pts:
        rows = [e.normal for e in hrep.equality_rows()] + [f.normal for f in hrep.facets if f.tight(p)]
        rank = len(rref(rows)[1]) if rows else 0
        if rank == hrep.ambient:
            out.append(p)
    return out


def hull_of_states(states: Sequence[TwoValuedState], spec: CoordinateSpec) -> tuple[CoordinateImage, PolytopeHRep]:
    image = evaluate_coordinates(states, spec)
    return image, facet_enumeration(image.points)
