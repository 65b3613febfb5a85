"""Multiset star-transposition and pancake permutation graphs.

Builders for the graphs on ell-set permutations, their positional and
repeat-position colorings, efficient-domination partitions, chain
embeddings, and exhaustive verifiers for all of the structural claims at
desk scale.
"""

__version__ = "0.1.0"

from .chains import (
    ChainEmbedding,
    CosetTable,
    kappa_embed,
    pancake_chain_check,
    schreier_quotient_check,
    verify_chain,
)
from .coloring import (
    ColoringReport,
    TotalColoring,
    choosability_suite,
    efficiency_obstruction_witness,
    max_selector,
    min_selector,
    positional_edge_coloring,
    sigma_total_coloring,
    verify_coloring,
)
from .domination import (
    DominationCertificate,
    certificate_to_json,
    code_search,
    d_set,
    oracle_check,
    se_set,
    sigma_set,
    verify_efficient_domination,
    verify_ei_avoidance,
    verify_partition_and_edge_cover,
)
from .errors import CapExceeded, GirthPrecondition
from .graphs import (
    GeneratorFamily,
    Graph,
    GraphMetrics,
    PermGraph,
    analyze,
    build_graph,
    build_odd_complete_colored,
    six_cycles,
)
from .iso import isomorphic
from .mstrings import (
    MString,
    Params,
    enumerate_vertices,
    list_assignment,
    mstring,
    prefix_reversal,
    rank,
    render,
    repeat_position,
    star_neighbors,
    unrank,
    vertex_count,
)
from .structure import (
    augment_supergraph,
    classify_six_cycles,
    color_class_decomposition,
    toroidal_assembly,
)

__all__ = [
    "CapExceeded",
    "ChainEmbedding",
    "ColoringReport",
    "CosetTable",
    "DominationCertificate",
    "GeneratorFamily",
    "GirthPrecondition",
    "Graph",
    "GraphMetrics",
    "MString",
    "Params",
    "PermGraph",
    "TotalColoring",
    "analyze",
    "augment_supergraph",
    "build_graph",
    "build_odd_complete_colored",
    "certificate_to_json",
    "choosability_suite",
    "classify_six_cycles",
    "code_search",
    "d_set",
    "efficiency_obstruction_witness",
    "enumerate_vertices",
    "isomorphic",
    "kappa_embed",
    "list_assignment",
    "max_selector",
    "min_selector",
    "mstring",
    "oracle_check",
    "pancake_chain_check",
    "positional_edge_coloring",
    "prefix_reversal",
    "rank",
    "render",
    "repeat_position",
    "schreier_quotient_check",
    "se_set",
    "sigma_set",
    "sigma_total_coloring",
    "six_cycles",
    "star_neighbors",
    "color_class_decomposition",
    "toroidal_assembly",
    "unrank",
    "verify_chain",
    "verify_coloring",
    "verify_efficient_domination",
    "verify_ei_avoidance",
    "verify_partition_and_edge_cover",
    "vertex_count",
]
