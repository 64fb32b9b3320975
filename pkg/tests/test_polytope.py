import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ctxlab.errors import ScaleBudgetExceeded, UnknownVertex
from ctxlab.polytope import (
    CoordinateSpec,
    LinearInequality,
    PolytopeHRep,
    affine_hull,
    canonical_inequality,
    evaluate_coordinates,
    facet_enumeration,
    hull_of_states,
    verify_hrep,
    vertices_from_hrep,
)
from ctxlab.states import TwoValuedState, enumerate_states

from .oracles import hull_facets

PAIRS = [("1", "3"), ("3", "5"), ("5", "7"), ("7", "9"), ("9", "1")]
ODD = ["1", "3", "5", "7", "9"]
MIDDLES = ["2", "4", "6", "8", "10"]
SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def ineq(normal, bound):
    return LinearInequality(tuple(normal), bound)


def _facet_set(hrep):
    return {(f.normal, f.bound) for f in hrep.facets}


def test_pair_products(pentagon):
    H = pentagon.hypergraph
    spec = CoordinateSpec.pair_product(PAIRS)
    mid = TwoValuedState.from_ones(H, MIDDLES)
    other = TwoValuedState.from_ones(H, ["1", "5", "8"])
    img = evaluate_coordinates([mid, other], spec)
    assert img.points == [(1,) * 5, (-1, -1, -1, 1, -1)]
    assert sum(img.points[1]) == -3
    assert img.sources == [[0], [1]]


def test_probability_coordinates(pentagon):
    H = pentagon.hypergraph
    mid = TwoValuedState.from_ones(H, MIDDLES)
    assert evaluate_coordinates([mid], CoordinateSpec.probability(ODD)).points == [(0,) * 5]


def test_unknown_vertex(pentagon):
    H = pentagon.hypergraph
    with pytest.raises(UnknownVertex):
        evaluate_coordinates(enumerate_states(H), CoordinateSpec.probability(["11"]))


def test_pairs_must_be_distinct():
    with pytest.raises(ValueError):
        CoordinateSpec.pair_product([("1", "3"), ("1", "3")])


def test_points_are_deduplicated(pentagon):
    img = evaluate_coordinates(enumerate_states(pentagon.hypergraph), CoordinateSpec.probability(["1"]))
    assert img.points == [(0,), (1,)]
    assert sorted(i for s in img.sources for i in s) == list(range(11))


def test_sign_convention_irrelevant(pentagon):
    states = enumerate_states(pentagon.hypergraph)
    img = evaluate_coordinates(states, CoordinateSpec.pair_product(PAIRS))
    for p, src in zip(img.points, img.sources):
        for si in src:
            s = states[si]
            flipped = tuple((2 * s[u] - 1) * (2 * s[v] - 1) for u, v in PAIRS)
            assert flipped == p


def test_affine_hull_examples():
    tri = affine_hull([(0, 0), (1, 0), (0, 1)])
    assert tri.dimension == 2 and tri.equalities == []
    seg = affine_hull([(0, 0), (1, 1)])
    assert seg.dimension == 1
    assert seg.equalities == [ineq((1, -1), 0)]


def test_pentagon_pair_hull_dimension(pentagon):
    img = evaluate_coordinates(enumerate_states(pentagon.hypergraph), CoordinateSpec.pair_product(PAIRS))
    assert affine_hull(img.points).dimension == 5


def test_unit_square():
    hrep = facet_enumeration(SQUARE)
    assert _facet_set(hrep) == {((1, 0), 0), ((0, 1), 0), ((-1, 0), -1), ((0, -1), -1)}
    check = verify_hrep(SQUARE, hrep)
    assert check.sound and check.tightness == [2, 2, 2, 2]


def test_bad_facet_is_unsound():
    hrep = PolytopeHRep([], [canonical_inequality((1, 0), Fraction(1, 2))], 2, 2)
    assert not verify_hrep(SQUARE, hrep).sound


def test_canonical_inequality_scales():
    assert canonical_inequality((Fraction(1, 2), Fraction(-3, 4)), Fraction(1, 4)) == ineq((2, -3), 1)
    assert canonical_inequality((-2, 4), -6) == ineq((-1, 2), -3)


def _pentagon_hull(states):
    return hull_of_states(states, CoordinateSpec.pair_product(PAIRS))


def test_pentagon_pentagram_facet(pentagon):
    states = enumerate_states(pentagon.hypergraph)
    img, hrep = _pentagon_hull(states)
    assert ((1,) * 5, -3) in _facet_set(hrep)
    assert verify_hrep(img.points, hrep).sound
    assert ((-1,) * 5, -1) not in _facet_set(hrep)


def test_pentagon_without_middle_state(pentagon):
    H = pentagon.hypergraph
    states = [s for s in enumerate_states(H) if s.ones() != MIDDLES]
    assert len(states) == 10
    full = _facet_set(_pentagon_hull(enumerate_states(H))[1])
    img, hrep = _pentagon_hull(states)
    reduced = _facet_set(hrep)
    assert ((1,) * 5, -3) in reduced and ((-1,) * 5, -1) in reduced
    assert verify_hrep(img.points, hrep).sound
    assert ((-1,) * 5, -1) in reduced - full


def test_probability_hull_upper_bound(pentagon):
    img, hrep = hull_of_states(enumerate_states(pentagon.hypergraph), CoordinateSpec.probability(ODD))
    assert ((-1,) * 5, -2) in _facet_set(hrep)


@pytest.mark.parametrize("spec", [CoordinateSpec.pair_product(PAIRS), CoordinateSpec.probability(ODD)])
def test_pentagon_hulls_match_oracle(pentagon, spec):
    img, hrep = hull_of_states(enumerate_states(pentagon.hypergraph), spec)
    dim, facets = hull_facets(img.points)
    assert hrep.dimension == dim
    assert _facet_set(hrep) == facets


def test_each_facet_has_enough_tight_points(pentagon):
    img, hrep = _pentagon_hull(enumerate_states(pentagon.hypergraph))
    assert all(t >= hrep.dimension for t in verify_hrep(img.points, hrep).tightness)


def test_hull_idempotence(pentagon):
    img, hrep = _pentagon_hull(enumerate_states(pentagon.hypergraph))
    verts = vertices_from_hrep(img.points, hrep)
    again = facet_enumeration(verts)
    assert _facet_set(again) == _facet_set(hrep)
    assert again.equalities == hrep.equalities


def test_equalities_stored_both_ways():
    hrep = facet_enumeration([(0, 0, 1), (1, 0, 1), (0, 1, 1)])
    assert {(e.normal, e.bound) for e in hrep.equalities} == {((0, 0, 1), 1), ((0, 0, -1), -1)}
    assert hrep.dimension == 2


def test_single_point():
    hrep = facet_enumeration([(1, 2)])
    assert hrep.dimension == 0 and hrep.facets == []
    assert verify_hrep([(1, 2)], hrep).sound


def test_scale_budget():
    with pytest.raises(ScaleBudgetExceeded):
        facet_enumeration([(i,) for i in range(65)])
    with pytest.raises(ScaleBudgetExceeded):
        facet_enumeration([tuple(range(13))])


def _random_points(seed):
    rng = random.Random(seed)
    d = rng.randint(1, 3)
    n = rng.randint(1, 8)
    pts = []
    for _ in range(n):
        pts.append(tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(d)))
    if rng.random() < 0.3 and d > 1:
        # force a lower-dimensional hull
        pts = [p[:-1] + (p[0] + 1,) for p in pts]
    return pts


@pytest.mark.parametrize("seed", range(200))
def test_random_hulls_match_oracle(seed):
    pts = _random_points(seed)
    hrep = facet_enumeration(pts)
    dim, facets = hull_facets(pts)
    assert hrep.dimension == dim
    assert _facet_set(hrep) == facets
    assert verify_hrep(pts, hrep).sound


coord = st.fractions(min_value=-4, max_value=4, max_denominator=4)


@st.composite
def point_sets(draw):
    d = draw(st.integers(1, 3))
    return draw(st.lists(st.tuples(*[coord] * d), min_size=1, max_size=8))


@settings(max_examples=100, deadline=None)
@given(point_sets())
def test_hull_properties(pts):
    hrep = facet_enumeration(pts)
    check = verify_hrep(pts, hrep)
    assert check.sound
    assert all(t >= hrep.dimension for t in check.tightness)
    verts = vertices_from_hrep(pts, hrep)
    assert _facet_set(facet_enumeration(verts)) == _facet_set(hrep)
