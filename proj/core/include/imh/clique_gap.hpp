#pragma once

#include "imh/graph.hpp"

namespace imh {

/// Two copies of G, fully joined to each other, plus an apex joined to
/// everything. Copy 1 occupies ids 0..n-1, copy 2 ids n..2n-1, apex 2n.
struct CliqueGapOutput {
    Graph source;
    Graph graph;
    std::vector<VertexId> copy1;
    std::vector<VertexId> copy2;
    VertexId apex = 0;
    std::size_t k = 0;
    std::size_t target = 0;  // 2k + 1
};

CliqueGapOutput clique_gap_reduce(const Graph& g, std::size_t k);

/// copy1(c) + copy2(c) + apex; c must be a k-clique of G.
VertexSet lift_clique(const CliqueGapOutput& out, std::span<const VertexId> clique);

/// Preimage of the larger of the two copy-intersections (copy 1 on ties).
/// c must be a clique of H with at least 2k+1 vertices.
VertexSet project_clique(const CliqueGapOutput& out, std::span<const VertexId> clique);

}  // namespace imh
