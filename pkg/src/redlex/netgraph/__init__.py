"""Word-graph construction, structural metrics, and community detection."""

from .community import (
    DEFAULT_METHODS,
    METHOD_ORDER,
    CommunityMethod,
    CommunityResult,
    DetectionResult,
    Partition,
    community_top_terms,
    detect_communities,
    modularity,
    optimal_partition,
)
from .export import (
    node_table,
    write_dot,
    write_edge_list_csv,
    write_graphml,
    write_node_table_csv,
)
from .graph import SemanticGraph, build_graph, connected_components, giant_component
from .metrics import (
    NetworkSummary,
    assortativity,
    betweenness_centrality,
    clique_number,
    density,
    eigenvector_centrality,
    k_core_decomposition,
    k_core_filter_below_median,
    mean_distance,
    network_summary,
    transitivity,
)

__all__ = [
    "CommunityMethod",
    "CommunityResult",
    "DEFAULT_METHODS",
    "DetectionResult",
    "METHOD_ORDER",
    "NetworkSummary",
    "Partition",
    "SemanticGraph",
    "assortativity",
    "betweenness_centrality",
    "build_graph",
    "clique_number",
    "community_top_terms",
    "connected_components",
    "density",
    "detect_communities",
    "eigenvector_centrality",
    "giant_component",
    "k_core_decomposition",
    "k_core_filter_below_median",
    "mean_distance",
    "modularity",
    "network_summary",
    "node_table",
    "optimal_partition",
    "transitivity",
    "write_dot",
    "write_edge_list_csv",
    "write_graphml",
    "write_node_table_csv",
]
