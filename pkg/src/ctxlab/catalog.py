"""Built-in logics: pentagon, Yu-Oh, G32 and a one-context demo."""

from __future__ import annotations

from .errors import UnknownCatalogName
from .hypergraph import LogicBundle, build_hypergraph
from .realization import complete_realization

_YU_OH_CONTEXTS = [
    # outer ring
    ["y1+", "z1", "y1-"],
    ["y1-", "u1", "h1"],
    ["h1", "u2", "y2+"],
    ["y2+", "z2", "y2-"],
    ["y2-", "u3", "h2"],
    ["h2", "u4", "y3+"],
    ["y3+", "z3", "y3-"],
    ["y3-", "u5", "h3"],
    ["h3", "u6", "y1+"],
    # spokes through h0
    ["y1-", "u7", "h0"],
    ["y2-", "u8", "h0"],
    ["y3-", "u9", "h0"],
    # chords
    ["h1", "u10", "y3+"],
    ["h2", "u11", "y1+"],
    ["h3", "u12", "y2+"],
    ["z1", "z2", "z3"],
]

YU_OH_RAYS = {
    "z1": (1, 0, 0),
    "z2": (0, 1, 0),
    "z3": (0, 0, 1),
    "y1-": (0, 1, -1),
    "y2-": (1, 0, -1),
    "y3-": (1, -1, 0),
    "y1+": (0, 1, 1),
    "y2+": (1, 0, 1),
    "y3+": (1, 1, 0),
    "h0": (1, 1, 1),
    "h1": (-1, 1, 1),
    "h2": (1, -1, 1),
    "h3": (1, 1, -1),
}


def petersen_edges() -> list[tuple[int, int]]:
    """Edges of the Petersen graph: outer 5-cycle, spokes, inner pentagram."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return [tuple(sorted(e)) for e in outer + spokes + inner]


def _g32_contexts() -> list[list[str]]:
    edges = petersen_edges()
    return [
        [f"{a}-{b}" for a, b in sorted(e for e in edges if node in e)]
        for node in range(10)
    ]


def cyclic_logic(m: int) -> LogicBundle:
    """Cycle of ``m`` three-element contexts, numbered like the pentagon.

    Context j is {2j+1, 2j+2, 2j+3} with the last one wrapping back to 1, so
    odd vertices are the intertwiners.
    """
    if m < 3:
        raise ValueError("a cyclic logic needs at least 3 contexts")
    contexts = []
    for j in range(m):
        a, mid, b = 2 * j + 1, 2 * j + 2, (2 * j + 3 if j < m - 1 else 1)
        contexts.append([str(a), str(mid), str(b)])
    H = build_hypergraph(contexts)
    return LogicBundle(
        H,
        name=f"cycle-{m}",
        cycle=tuple(str(2 * j + 1) for j in range(m)),
    )


def _pentagon() -> LogicBundle:
    b = cyclic_logic(5)
    return LogicBundle(
        b.hypergraph,
        name="pentagon",
        aliases=("house", "pentagram"),
        cycle=b.cycle,
        notes="five 3-element contexts in a cycle; intertwiners 1,3,5,7,9",
    )


def _yu_oh() -> LogicBundle:
    H = build_hypergraph(_YU_OH_CONTEXTS)
    R = complete_realization(H, YU_OH_RAYS)
    return LogicBundle(
        H,
        realization=R,
        name="yu-oh",
        notes="13 labelled rays; u1..u12 completed by cross products",
    )


def _g32() -> LogicBundle:
    return LogicBundle(
        build_hypergraph(_g32_contexts()),
        name="g32",
        notes="vertices are Petersen-graph edges, contexts its nodes",
    )


def _triangle() -> LogicBundle:
    return LogicBundle(build_hypergraph([["a", "b", "c"]]), name="triangle-demo")


_BUILDERS = {
    "pentagon": _pentagon,
    "yu-oh": _yu_oh,
    "g32": _g32,
    "triangle-demo": _triangle,
}
_ALIASES = {"house": "pentagon", "pentagram": "pentagon"}


def catalog_names() -> list[str]:
    return list(_BUILDERS)


def catalog(name: str) -> LogicBundle:
    key = _ALIASES.get(name, name)
    try:
        return _BUILDERS[key]()
    except KeyError:
        raise UnknownCatalogName(
            f"unknown catalog entry {name!r}; known: {', '.join(_BUILDERS)}"
        ) from None
