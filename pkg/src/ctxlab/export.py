"""JSON export of analysis results.

Field names are stable and documented in docs/format.md. Rationals become
strings ("1/2", "0", "1"), two-valued states become the list of vertex names
valued 1 (in vertex index order), inequalities become
``{"normal": [...], "bound": b, "sense": "ge"}``.
"""

from __future__ import annotations

import json
from dataclasses import fields, is_dataclass
from fractions import Fraction
from functools import singledispatch

from .coloring import ChromaticReport, Coloring, ColoringReport, SeparationReport
from .hypergraph import Hypergraph, IncidenceProfile
from .polytope import CoordinateImage, HRepCheck, LinearInequality, PolytopeHRep
from .realization import RealizationReport
from .states import (
    AggregabilityReport,
    RationalState,
    SeparatingReport,
    TwoValuedState,
)


@singledispatch
def to_jsonable(obj, H: Hypergraph | None = None):
    if is_dataclass(obj):
        return {f.name: to_jsonable(getattr(obj, f.name), H) for f in fields(obj)
                if not f.name.startswith("_")}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, H) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x, H) for x in obj]
    return obj


@to_jsonable.register
def _(obj: Fraction, H=None):
    return str(obj)


@to_jsonable.register
def _(obj: Coloring, H=None):
    out = {"k": obj.k}
    if H is not None:
        out["assignment"] = obj.as_mapping(H)
    else:
        out["assignment"] = list(obj.assignment)
    return out


@to_jsonable.register
def _(obj: ChromaticReport, H=None):
    return {
        "chromatic_number": obj.chromatic_number,
        "witness": to_jsonable(obj.witness, H) if obj.witness is not None else None,
        "exhausted": list(obj.exhausted),
        "nodes": {str(k): v for k, v in obj.nodes.items()},
    }


@to_jsonable.register
def _(obj: ColoringReport, H=None):
    return {
        "exclusive": obj.exclusive,
        "complete": obj.complete,
        "admissible": obj.admissible,
        "equitable": obj.equitable,
        "class_sizes": list(obj.class_sizes),
        "violations": [[str(a), str(b)] for a, b in obj.violations],
    }


@to_jsonable.register
def _(obj: TwoValuedState, H=None):
    return obj.ones()


@to_jsonable.register
def _(obj: RationalState, H=None):
    return {n: str(v) for n, v in zip(obj.names, obj.values)}


@to_jsonable.register
def _(obj: SeparatingReport, H=None):
    return {"separating": obj.separating, "unseparated_pairs": [list(p) for p in obj.unseparated_pairs]}


@to_jsonable.register
def _(obj: SeparationReport, H=None):
    return {
        "separating": not obj.unseparated(),
        "unseparated_pairs": [list(p) for p in obj.unseparated()],
    }


@to_jsonable.register
def _(obj: AggregabilityReport, H=None):
    entries = []
    for i, (s, w) in enumerate(zip(obj.states, obj.witnesses)):
        entry = {"id": i, "state": s.ones(), "aggregable": w is not None}
        if w is not None:
            entry["witness"] = {"coloring": to_jsonable(w[0], H), "color": w[1]}
        entries.append(entry)
    return {"states": entries, "colorings_searched": obj.colorings_searched}


@to_jsonable.register
def _(obj: LinearInequality, H=None):
    return {"normal": list(obj.normal), "bound": obj.bound, "sense": obj.sense}


@to_jsonable.register
def _(obj: PolytopeHRep, H=None):
    return {
        "dimension": obj.dimension,
        "ambient": obj.ambient,
        "equalities": [to_jsonable(e) for e in obj.equalities],
        "facets": [to_jsonable(f) for f in obj.facets],
    }


@to_jsonable.register
def _(obj: HRepCheck, H=None):
    return {"sound": obj.sound, "tightness": list(obj.tightness)}


@to_jsonable.register
def _(obj: CoordinateImage, H=None):
    return {
        "points": [[str(x) for x in p] for p in obj.points],
        "sources": [list(s) for s in obj.sources],
    }


@to_jsonable.register
def _(obj: RealizationReport, H=None):
    return {
        "ok": obj.ok,
        "context_violations": [
            {"context": c, "pair": [u, v], "inner_product": ip}
            for c, u, v, ip in obj.context_violations
        ],
        "rank_violations": [{"context": c, "rank": r} for c, r in obj.rank_violations],
        "duplicate_rays": [list(p) for p in obj.duplicate_rays],
        "faithful": obj.faithful,
        "faithfulness_exceptions": [list(p) for p in obj.faithfulness_exceptions],
    }


@to_jsonable.register
def _(obj: IncidenceProfile, H=None):
    return {"degrees": dict(obj.degrees), "intertwiners": list(obj.intertwiners)}


def export_json(result, hypergraph: Hypergraph | None = None, indent: int | None = 2) -> str:
    return json.dumps(to_jsonable(result, hypergraph), indent=indent)
