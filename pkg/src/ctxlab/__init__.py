"""ctxlab: exact analysis of finite quantum logics given as hypergraphs.

Chromatic numbers with exhaustive certificates, two-valued states and their
separability, aggregation of colorings into states, exact orthogonal
realizations, and facets of correlation polytopes.
"""

__version__ = "0.1.0"

from .catalog import catalog, catalog_names, cyclic_logic
from .coloring import (
    ChromaticReport,
    Coloring,
    ColoringReport,
    check_coloring,
    chromatic_number,
    chromatic_separation,
    enumerate_colorings,
    find_coloring,
)
from .dsl import parse_logic, serialize_logic
from .export import export_json
from .hypergraph import (
    Hypergraph,
    LogicBundle,
    build_hypergraph,
    incidence_profile,
    uniformity,
)
from .kernels import BACKEND
from .polytope import (
    CoordinateSpec,
    LinearInequality,
    PolytopeHRep,
    affine_hull,
    evaluate_coordinates,
    facet_enumeration,
    verify_hrep,
)
from .realization import Realization, canonical_ray, cross_complete, verify_realization
from .states import (
    RationalState,
    TwoValuedState,
    aggregability_report,
    aggregate,
    check_state,
    enumerate_states,
    fractional_reachable,
    fractional_state,
    separating_report,
    subset_value_profile,
)

__all__ = [
    "BACKEND",
    "ChromaticReport",
    "Coloring",
    "ColoringReport",
    "CoordinateSpec",
    "Hypergraph",
    "LinearInequality",
    "LogicBundle",
    "PolytopeHRep",
    "RationalState",
    "Realization",
    "TwoValuedState",
    "affine_hull",
    "aggregability_report",
    "aggregate",
    "build_hypergraph",
    "canonical_ray",
    "catalog",
    "catalog_names",
    "check_coloring",
    "check_state",
    "chromatic_number",
    "chromatic_separation",
    "cross_complete",
    "cyclic_logic",
    "enumerate_colorings",
    "enumerate_states",
    "evaluate_coordinates",
    "export_json",
    "facet_enumeration",
    "find_coloring",
    "fractional_reachable",
    "fractional_state",
    "incidence_profile",
    "parse_logic",
    "separating_report",
    "serialize_logic",
    "subset_value_profile",
    "uniformity",
    "verify_hrep",
    "verify_realization",
]
