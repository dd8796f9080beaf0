"""Matching book embeddings of graph transformations and F-sums.

Graphs, the S/R/Q/T transformations, F-sums, an embedding validator,
explicit page constructions, lower-bound certificates and an exact
small-graph solver backed by a compiled kernel (with a pure-Python fallback).
"""

from .bounds import (
    BoundCertificate,
    BoundReason,
    BudgetExceeded,
    Classification,
    chromatic_index,
    classify,
    edge_coloring,
    mbt_lower_bound,
    verify_certificate,
)
from .constructions import (
    ConstructionError,
    DispersableInput,
    dispersable_input,
    embed_cycle_Q_cycle,
    embed_fsum_generic,
    embed_outerplanar,
    embed_path_Q,
    embed_Q_star,
    embed_star_Q,
    embed_T_star,
    embed_transformed,
)
from .embedding import BookEmbedding, ValidationReport, Violation, ViolationKind, page_count, restrict_to_copy, validate
from .fsum import f_sum, f_sum_via_product
from .graph import (
    Color,
    EdgeVertex,
    Graph,
    GraphError,
    Pair,
    Plain,
    SizeBudgetExceeded,
    Tag,
    bipartition,
    cartesian_product,
    circulant,
    complete,
    complete_bipartite,
    cycle,
    degree_profile,
    generate,
    graph_from_edges,
    isomorphic,
    make_graph,
    path,
    star,
)
from .io import ParseError, parse_embedding, parse_graph, parse_graph6, render_svg, serialize_embedding, serialize_graph
from .kernel import BACKEND_NAME
from .solver import SearchStats, SolveResult, embed_with_k, heuristic_upper, mbt_exact
from .transforms import TransformKind, transform

__version__ = "0.1.0"
