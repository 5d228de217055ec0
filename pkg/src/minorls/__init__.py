"""Swap-based local search for independent set, vertex cover and dominating set
on minor-free graphs, with the division machinery used to analyse it."""

from .analysis import (
    ProofReport,
    approximation_report,
    build_contracted_graph,
    check_theorem_chain,
    cover_ratio_bound,
)
from .division import (
    Division,
    DivisionError,
    DivisionStats,
    beta_bound,
    build_division,
    check_lemma_bounds,
    verify_division,
)
from .exact import ExactResult, exact, exact_max_independent_set, exact_min_dominating_set, exact_min_vertex_cover
from .graph import (
    Graph,
    GraphError,
    GraphSpec,
    IdMap,
    ParseError,
    contract_edges,
    generate,
    induced_subgraph,
    parse_graph,
    serialize_graph,
)
from .local_search import (
    Problem,
    SearchTrace,
    eps_to_r,
    find_improving_swap,
    is_feasible,
    local_search,
    verify_local_optimality,
)
from .separators import SeparatorResult, SeparatorStrategy, find_separator, verify_separator

__version__ = "0.1.0"
