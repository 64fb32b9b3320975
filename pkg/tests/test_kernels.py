import random

from hypothesis import given, settings

from ctxlab import _pykernels, kernels
from ctxlab.catalog import catalog, cyclic_logic

from .strategies import uniform_hypergraphs

import pytest

needs_compiled = pytest.mark.skipif(kernels._compiled is None, reason="compiled kernels not built")


def _color_args(H, k, symmetric):
    pre = [-1] * H.n_vertices
    if symmetric:
        for color, v in enumerate(H.contexts[0]):
            pre[v] = color
    return H.neighbor_masks(), H.context_masks(), k, pre, symmetric


def _both(fn, *args):
    return fn(*args, backend="python"), fn(*args, backend="compiled")


def test_backend_flag():
    assert kernels.BACKEND in ("compiled", "python")


def test_pure_module_status_codes():
    assert (_pykernels.EXHAUSTED, _pykernels.STOPPED, _pykernels.BUDGET) == (0, 1, 2)


@needs_compiled
@pytest.mark.parametrize("name", ["pentagon", "g32", "triangle-demo", "yu-oh"])
@pytest.mark.parametrize("k", [3, 4])
def test_color_search_agrees_on_catalog(name, k):
    H = catalog(name).hypergraph
    py, cy = (
        kernels.color_search(*_color_args(H, k, True), max_solutions=2000, node_limit=10**6, backend=b)
        for b in ("python", "compiled")
    )
    assert py == cy


@needs_compiled
@pytest.mark.parametrize("name", ["pentagon", "g32", "triangle-demo", "yu-oh"])
def test_state_search_agrees_on_catalog(name):
    H = catalog(name).hypergraph
    py, cy = _both(kernels.state_search, H.context_masks(), H.neighbor_masks(), 10**6)
    assert py == cy


@needs_compiled
@settings(max_examples=60, deadline=None)
@given(uniform_hypergraphs())
def test_backends_agree_on_random_hypergraphs(H):
    for k in (2, 3, 4):
        if k < len(H.contexts[0]):
            continue
        for symmetric in (True, False):
            args = _color_args(H, k, symmetric)
            py = kernels.color_search(*args, max_solutions=0, node_limit=10**6, backend="python")
            cy = kernels.color_search(*args, max_solutions=0, node_limit=10**6, backend="compiled")
            assert py == cy
    py, cy = _both(kernels.state_search, H.context_masks(), H.neighbor_masks(), 10**6)
    assert py == cy


@needs_compiled
def test_budget_status_matches():
    H = cyclic_logic(15).hypergraph
    args = _color_args(H, 3, False)
    py = kernels.color_search(*args, max_solutions=0, node_limit=50, backend="python")
    cy = kernels.color_search(*args, max_solutions=0, node_limit=50, backend="compiled")
    assert py[2] == cy[2] == kernels.BUDGET
    assert py[1] == cy[1]


def test_stop_after_max_solutions():
    H = catalog("pentagon").hypergraph
    sols, _, status = kernels.color_search(*_color_args(H, 3, False), max_solutions=1, node_limit=0,
                                           backend="python")
    assert len(sols) == 1 and status == kernels.STOPPED


def test_wide_input_falls_back_to_python():
    H = cyclic_logic(40).hypergraph  # 80 vertices
    assert H.n_vertices > 64
    args = (H.context_masks(), H.neighbor_masks(), 2000)
    assert kernels.state_search(*args) == _pykernels.state_search(*args)


def test_node_budget_env(monkeypatch):
    monkeypatch.setenv("CTXLAB_BUDGET", "123")
    assert kernels.node_budget() == 123
    assert kernels.node_budget(7) == 7
    monkeypatch.delenv("CTXLAB_BUDGET")
    assert kernels.node_budget() == kernels.DEFAULT_NODE_BUDGET


@needs_compiled
def test_random_dense_instance_agrees():
    rng = random.Random(11)
    from ctxlab.hypergraph import build_hypergraph

    ctxs = set()
    while len(ctxs) < 14:
        ctxs.add(frozenset(rng.sample(range(20), 3)))
    H = build_hypergraph([[str(v) for v in sorted(c)] for c in sorted(ctxs, key=sorted)])
    args = _color_args(H, 4, True)
    py = kernels.color_search(*args, max_solutions=500, node_limit=10**6, backend="python")
    cy = kernels.color_search(*args, max_solutions=500, node_limit=10**6, backend="compiled")
    assert py == cy
