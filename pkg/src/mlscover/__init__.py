"""Minimal local set covers of graphs and q-multigraphs via cut-rank."""

from .cover import (CoverTrace, MlsCover, TargetTrace, find_mls_containing, graph_cover,
                    grow_full_avoiding, intersection_graph, mls_cover, mls_cover_multigraph,
                    shrink_to_mls)
from .graph import (Graph, MultiGraph, VertexSet, closed_neighborhood, cut_matrix,
                    local_complement, members, neighborhood, odd_neighborhood, universe, vset)
from .local_sets import (LocalSetRecord, MlsStatistics, enumerate_minimal_local_sets,
                         generator_count_from_cutrank, generators_of, is_local_set,
                         is_minimal_local_set, is_minimal_local_set_by_definition,
                         local_min_degree, log2_mls_count_lower_bound, max_mls_size_bound,
                         mls_count_lower_bound,
                         verify_generator_structure)
from .rank import (ConnectivityOracle, CutRankOracle, FunctionOracle, KernelBasis, cutrank,
                   cutrank_q, is_full_cutrank, kernel_basis, matroid_connectivity_oracle,
                   uniform_matroid_oracle)

__version__ = "0.1.0"
