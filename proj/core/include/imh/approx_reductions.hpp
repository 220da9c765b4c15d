#pragma once

#include <span>
#include <vector>

#include "imh/graph.hpp"

namespace imh {

/// G plus one pendant image vertex per source vertex. Source vertices keep
/// their ids; the image of u is n + u.
struct ImageReductionOutput {
    Graph source;
    Graph graph;
    std::vector<VertexId> image_map;  // source vertex -> image vertex
};

ImageReductionOutput image_reduce(const Graph& g);

/// Independent set of G with one vertex per matching edge: the source end of
/// an image edge, otherwise the lower id. m must be an induced matching of H.
VertexSet matching_to_mis(const ImageReductionOutput& out, std::span<const Edge> m);

/// G joined to a p-clique b_1..b_p (ids p..2p-1). The cycle is
/// b_1, u_1, b_2, u_2, ..., b_p, u_p.
struct HamClosureOutput {
    Graph source;
    Graph graph;
    std::vector<VertexId> b_map;
    std::vector<VertexId> ham_cycle;
};

/// Requires at least 2 source vertices, so that the cycle has length >= 4.
HamClosureOutput ham_closure_reduce(const Graph& g);

/// s itself when it has at least two edges and all lie in G, otherwise the
/// lowest edge of G. Throws PreconditionError when G is edgeless and the
/// fallback is needed.
EdgeSet ham_closure_recover(const HamClosureOutput& out, std::span<const Edge> s);

/// Each source vertex u_i becomes an S1 group s_i and an S2 group t_i of
/// n^3 vertices. The j-th vertex of s_i is i*n^3 + j, the j-th vertex of t_i
/// is (n + i)*n^3 + j; they form the j-th homogeneous edge of u_i.
/// s_i and t_j (i != j) are completely joined when u_i u_j is an edge of G.
struct BlowupOutput {
    Graph source;
    Graph graph;
    std::size_t group_size = 0;  // n^3

    VertexId s_vertex(VertexId source_vertex, std::size_t j) const;
    VertexId t_vertex(VertexId source_vertex, std::size_t j) const;
    /// Source vertex whose group holds v.
    VertexId owner(VertexId v) const;
    bool is_homogeneous(const Edge& e) const { return owner(e.u) == owner(e.v); }
};

BlowupOutput blowup_reduce(const Graph& g);

/// Source vertices whose homogeneous edges appear in s, ascending. s must be
/// an induced matching of H.
VertexSet blowup_to_mis(const BlowupOutput& out, std::span<const Edge> s);

/// Homogeneous edge count per source vertex and the largest number of
/// heterogeneous edges between one (s_i, t_j) pair.
struct BlowupCensus {
    std::vector<std::size_t> homogeneous;
    std::size_t heterogeneous = 0;
    std::size_t max_per_block = 0;
};

BlowupCensus blowup_census(const BlowupOutput& out, std::span<const Edge> s);

/// Equally sided bipartite G (sides V1 = S1, V2 = S2, each of size p) plus
/// l_1..l_{p+1} on S1 and m_1..m_{p+1} on S2, all l joined to all m, V1
/// joined to every m and V2 joined to every l. l_i is 2p + i - 1 and m_i is
/// 3p + i. The cycle is m_1, u_1, ..., m_p, u_p, m_{p+1}, l_1, v_1, ...,
/// l_p, v_p, l_{p+1} with u and v the sides in ascending id order.
struct HamBipClosureOutput {
    Graph source;
    Graph graph;
    std::vector<VertexId> l_map;
    std::vector<VertexId> m_map;
    std::vector<VertexId> ham_cycle;
    std::size_t p = 0;
};

/// Uses g's side labels when present, otherwise the BFS bipartition. Throws
/// PreconditionError when g is not bipartite, the sides differ in size or
/// p = 0.
HamBipClosureOutput hambip_closure_reduce(const Graph& g);

/// s when every edge lies in G, otherwise the lowest edge of G.
EdgeSet hambip_recover(const HamBipClosureOutput& out, std::span<const Edge> s);

}  // namespace imh
