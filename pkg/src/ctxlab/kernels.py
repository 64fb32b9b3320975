"""Kernel selection: compiled extension when importable, else pure Python.

Set ``CTXLAB_PURE=1`` to force the pure-Python kernels. Inputs with more
than 64 vertices or colors always go to the pure-Python path, since the
compiled kernels work on 64-bit masks.
"""

import os

from . import _pykernels

EXHAUSTED = _pykernels.EXHAUSTED
STOPPED = _pykernels.STOPPED
BUDGET = _pykernels.BUDGET

_compiled = None
if not os.environ.get("CTXLAB_PURE"):
    try:
        from . import _kernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = "compiled" if _compiled is not None else "python"


def color_search(adj, ctx_masks, k, pre, break_symmetry=True, max_solutions=0,
                 node_limit=0, backend=None):
    impl = _pick(backend, len(adj) <= 64 and k <= 64)
    return impl.color_search(list(adj), list(ctx_masks), k, list(pre),
                             bool(break_symmetry), max_solutions, node_limit)


def state_search(ctx_masks, adj, node_limit=0, backend=None):
    impl = _pick(backend, len(adj) <= 64)
    return impl.state_search(list(ctx_masks), list(adj), node_limit)


def _pick(backend, fits):
    if backend == "python":
        return _pykernels
    if backend == "compiled":
        if _compiled is None:
            raise RuntimeError("compiled kernels are not available")
        return _compiled
    if _compiled is not None and fits:
        return _compiled
    return _pykernels


DEFAULT_NODE_BUDGET = 5_000_000


def node_budget(explicit=None):
    """Search node limit: explicit value, else $CTXLAB_BUDGET, else the default."""
    if explicit is not None:
        return int(explicit)
    env = os.environ.get("CTXLAB_BUDGET")
    if env:
        return int(env)
    return DEFAULT_NODE_BUDGET
