"""Induced cycle counts in extremal planar graphs.

Graph construction, exact induced-cycle census, planarity and rotation
systems, the named extremal families, closed-form counts, and
enumeration and search over small planar graphs.
"""

from __future__ import annotations

__version__ = "0.1.0"

from .census import (
    CensusError,
    CycleCensus,
    PathNeighborhoodSplit,
    count_induced_cycles,
    count_induced_cycles_through_path,
    cycles_through_path,
    per_vertex_min_profile,
    principal_neighbors,
    xy_split,
)
from .constructors import (
    Construction,
    ConstructionError,
    RequiredFormSpec,
    make_case_graph,
    make_even_blowup,
    make_face_gadget,
    make_h_minus_z,
    make_k2m,
    make_odd_blowup,
    make_required_form,
)
from .formats import Graph6Error, dot_export, graph6_decode, graph6_encode
from .formulas import argmax_case, eval_named, fi_c4, fi_c5, lemma5, solve_case
from .graph import Graph, GraphError, build, induced_subgraph
from .planar import (
    Embedding,
    NotPlanar,
    embed,
    faces_of,
    find_empty_k27,
    is_planar,
    region_split,
)

__all__ = [
    "__version__",
    "Graph", "GraphError", "build", "induced_subgraph",
    "Graph6Error", "graph6_encode", "graph6_decode", "dot_export",
    "Embedding", "NotPlanar", "embed", "faces_of", "find_empty_k27", "is_planar", "region_split",
    "CensusError", "CycleCensus", "PathNeighborhoodSplit", "count_induced_cycles",
    "count_induced_cycles_through_path", "cycles_through_path", "per_vertex_min_profile",
    "principal_neighbors", "xy_split",
    "Construction", "ConstructionError", "RequiredFormSpec", "make_k2m", "make_required_form",
    "make_even_blowup", "make_odd_blowup", "make_face_gadget", "make_h_minus_z", "make_case_graph",
    "fi_c4", "fi_c5", "lemma5", "eval_named", "solve_case", "argmax_case",
]
