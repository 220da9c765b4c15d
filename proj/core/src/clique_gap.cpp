#include "imh/clique_gap.hpp"

#include <algorithm>
#include <string>

namespace imh {

CliqueGapOutput clique_gap_reduce(const Graph& g, std::size_t k) {
    if (k < 1)
        throw PreconditionError("clique-gap reduction needs k >= 1");
    const auto n = static_cast<VertexId>(g.num_vertices());
    CliqueGapOutput out;
    out.source = g;
    out.k = k;
    out.target = 2 * k + 1;
    out.apex = 2 * n;
    for (VertexId v = 0; v < n; ++v) {
        out.copy1.push_back(v);
        out.copy2.push_back(n + v);
    }
    GraphBuilder b(2 * n + 1);
    for (const Edge& e : g.edges()) {
        b.add_edge(e.u, e.v);
        b.add_edge(n + e.u, n + e.v);
    }
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId c = 0; c < n; ++c)
            b.add_edge(a, n + c);
        b.add_edge(a, out.apex);
        b.add_edge(n + a, out.apex);
    }
    out.graph = b.build();
    return out;
}

VertexSet lift_clique(const CliqueGapOutput& out, std::span<const VertexId> clique) {
    if (clique.size() != out.k)
        throw PreconditionError("lift_clique expects a clique of size k = " + std::to_string(out.k));
    VertexSet lifted;
    for (VertexId v : clique) {
        if (v >= out.copy1.size())
            throw PreconditionError("vertex " + std::to_string(v) + " is not in the source graph");
        lifted.push_back(out.copy1[v]);
        lifted.push_back(out.copy2[v]);
    }
    lifted.push_back(out.apex);
    std::sort(lifted.begin(), lifted.end());
    // Copy 1 induces G, so the lifted set is a clique exactly when c is.
    if (!is_clique(out.graph, lifted))
        throw PreconditionError("lift_clique input is not a clique");
    return lifted;
}

VertexSet project_clique(const CliqueGapOutput& out, std::span<const VertexId> clique) {
    if (clique.size() < out.target)
        throw PreconditionError("project_clique expects at least 2k+1 vertices");
    if (!is_clique(out.graph, clique))
        throw PreconditionError("project_clique input is not a clique of H");
    const auto n = static_cast<VertexId>(out.copy1.size());
    VertexSet first;
    VertexSet second;
    for (VertexId v : clique) {
        if (v < n)
            first.push_back(v);
        else if (v < 2 * n)
            second.push_back(v - n);
    }
    VertexSet& chosen = first.size() >= second.size() ? first : second;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace imh
