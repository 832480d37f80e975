"""Exact clique counting and extremal clique bounds for small graphs."""

from .bounds import (
    BoundPreconditionError,
    EdgeDecomposition,
    OpenProblemGap,
    binomial_power_inequality,
    decompose_edges,
    degenerate_bound,
    degenerate_edge_bound,
    degree_bound,
    format_rational,
    k5_minor_free_bound,
    k33_minor_free_bound,
    max_cliques_nm,
    open_problem_gap,
    planar_bound,
    planar_clique_size_bounds,
    power_ratio_inequality,
    zykov_bound,
    zykov_total_bound,
)
from .classes import (
    MinorBudgetExceeded,
    MinorSearchBudget,
    degeneracy,
    hadwiger_multipartite,
    hadwiger_number,
    has_minor,
    is_planar,
    max_degree,
    max_matching_bruteforce,
    multipartite_reduced_matching,
    sitton_matching,
)
from .cliques import CliqueCensus, clique_census, count_cliques, count_cliques_oracle
from .constructions import (
    construct_degenerate_extremal,
    construct_degree_extremal,
    construct_dtree,
    construct_extremal_nm,
    construct_k5_chain,
    construct_multipartite,
    construct_planar_extremal,
    construct_stacked_planar,
    construct_v8,
)
from .graph import (
    Graph,
    GraphError,
    PasteMap,
    add_edge,
    decode_graph6,
    delete_vertex,
    empty_graph,
    encode_graph6,
    from_edges,
    neighbourhood_subgraph,
    paste,
)
from .verify import (
    GraphClass,
    VerificationReport,
    verify_class_bound,
    verify_nm_tightness,
    verify_planar_census,
    verify_zykov,
)

__version__ = "0.1.0"
