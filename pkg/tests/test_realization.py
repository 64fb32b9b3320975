from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ctxlab.catalog import YU_OH_RAYS
from ctxlab.errors import CollinearInput, DomainMismatch, WrongDimension, ZeroVector
from ctxlab.realization import (
    Realization,
    canonical_ray,
    complete_realization,
    cross_complete,
    dot,
    verify_realization,
)


@pytest.mark.parametrize(
    "coords, ray",
    [
        ((0, 2, -2), (0, 1, -1)),
        ((-1, -1, -1), (1, 1, 1)),
        ((Fraction(1, 2), 0, Fraction(1, 2)), (1, 0, 1)),
    ],
)
def test_canonical_ray(coords, ray):
    assert canonical_ray(coords) == ray


def test_zero_vector():
    with pytest.raises(ZeroVector):
        canonical_ray((0, 0, 0))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


@given(st.lists(rationals, min_size=1, max_size=5).filter(any))
def test_canonical_ray_idempotent_and_projective(coords):
    r = canonical_ray(coords)
    assert canonical_ray(r) == r
    assert canonical_ray([-3 * x for x in coords]) == r
    first = next(x for x in r if x)
    assert first > 0
    # r is a positive-or-negative multiple of coords
    ratios = {Fraction(a) / b for a, b in zip(r, coords) if b}
    assert len(ratios) == 1
    assert all(a == 0 for a, b in zip(r, coords) if b == 0)


@pytest.mark.parametrize(
    "a, b, c",
    [((1, 0, 0), (0, 1, 0), (0, 0, 1)), ((0, 1, -1), (-1, 1, 1), (2, 1, 1))],
)
def test_cross_complete(a, b, c):
    r = cross_complete(a, b)
    assert r == c
    assert dot(r, a) == 0 and dot(r, b) == 0


def test_cross_collinear():
    with pytest.raises(CollinearInput):
        cross_complete((1, 1, 1), (2, 2, 2))


def test_cross_wrong_dimension():
    with pytest.raises(WrongDimension):
        cross_complete((1, 0), (0, 1))


ints = st.integers(min_value=-6, max_value=6)


@given(st.tuples(ints, ints, ints), st.tuples(ints, ints, ints))
def test_cross_is_orthogonal(a, b):
    try:
        r = cross_complete(a, b)
    except (CollinearInput, ZeroVector):
        return
    assert dot(r, a) == 0 and dot(r, b) == 0


def test_yu_oh_passes(yu_oh):
    H, R = yu_oh.hypergraph, yu_oh.realization
    assert len(R.rays) == 25
    rep = verify_realization(H, R)
    assert rep.ok and rep.contexts_ok
    assert [R.rays[z] for z in ("z1", "z2", "z3")] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for name, vec in YU_OH_RAYS.items():
        assert R.rays[name] == canonical_ray(vec)


def test_yu_oh_completion_from_caption_only(yu_oh):
    H = yu_oh.hypergraph
    R = complete_realization(H, YU_OH_RAYS)
    assert R.covers(H)
    assert dict(R.rays) == dict(yu_oh.realization.rays)


def test_yu_oh_rays_distinct(yu_oh):
    rays = list(yu_oh.realization.rays.values())
    assert len(set(rays)) == len(rays)


def test_yu_oh_bad_h0(yu_oh):
    H = yu_oh.hypergraph
    rays = dict(yu_oh.realization.rays)
    rays["h0"] = (1, 1, 0)
    rep = verify_realization(H, Realization(3, rays))
    assert not rep.ok
    spokes = {ci for ci in range(H.n_contexts) if "h0" in H.context_names(ci)}
    hit = {c for c, *_ in rep.context_violations}
    assert spokes <= hit
    assert any(u == "y1-" and v == "h0" and ip == 1 for _, u, v, ip in rep.context_violations)


def test_yu_oh_faithfulness_matches_pair_scan(yu_oh):
    H, R = yu_oh.hypergraph, yu_oh.realization
    rep = verify_realization(H, R, faithful=True)
    expected = sorted(
        (H.names[u], H.names[v])
        for u, v in combinations(range(H.n_vertices), 2)
        if not H.share_context(u, v) and dot(R.rays[H.names[u]], R.rays[H.names[v]]) == 0
    )
    assert sorted(tuple(p) for p in rep.faithfulness_exceptions) == expected
    assert rep.faithful == (not expected)


def test_faithful_unchecked_is_none(yu_oh):
    assert verify_realization(yu_oh.hypergraph, yu_oh.realization).faithful is None


def test_missing_ray(triangle):
    with pytest.raises(DomainMismatch):
        verify_realization(triangle.hypergraph, Realization(3, {"a": (1, 0, 0)}))


def test_rank_violation(triangle):
    R = Realization(3, {"a": (1, 0, 0), "b": (0, 1, 0), "c": (1, 0, 0)})
    rep = verify_realization(triangle.hypergraph, R)
    assert rep.rank_violations and rep.duplicate_rays and not rep.ok
