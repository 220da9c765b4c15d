#pragma once

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "imh/graph.hpp"

namespace imh {

/// Walk given as an ordered edge list plus the vertex it starts from.
struct EdgeSequence {
    VertexId start = 0;
    std::vector<Edge> edges;

    /// Vertices visited in order, start first; length edges.size() + 1.
    std::vector<VertexId> vertices() const;
};

/// Line graph together with the source edge behind each of its vertices.
struct LineGraphMap {
    Graph graph;
    std::vector<Edge> source_edges;  // vertex id -> source edge
};

/// Hierholzer's algorithm, always leaving a vertex through its lowest-id
/// unused edge. Starts at the lowest-id non-isolated vertex. Throws
/// PreconditionError naming the vertex when some degree is odd or the
/// edges do not form one connected component.
EdgeSequence eulerian_circuit(const Graph& g);

/// Vertices follow the order of g.edges() (lexicographic).
LineGraphMap line_graph(const Graph& g);

struct LineGraphCycle {
    LineGraphMap line;
    std::vector<VertexId> cycle;
};

/// Hamiltonian cycle in the line graph of K_l obtained by reading the
/// Eulerian circuit of K_l edge by edge. Requires odd l >= 3.
LineGraphCycle line_graph_ham_cycle(std::size_t l);

/// Hamiltonian path in K_{n,n} laid out as gen_complete_bipartite(n, n)
/// (ids 0..n-1 on one side, n..2n-1 on the other) from u to v, which must
/// lie on opposite sides. The optional pairing lists (v_i, u_i) with v_i on
/// v's side and u_i on u's side and must cover every other vertex once; the
/// default pairs both remainders in ascending id order. The result is
/// u, v_1, u_1, ..., v_{n-1}, u_{n-1}, v.
std::vector<VertexId> balanced_kb_ham_path(std::size_t n, VertexId u, VertexId v,
                                           std::optional<std::vector<std::pair<VertexId, VertexId>>> pairing = {});

/// Raised when the repair loop of dense_bipartite_ham_path cannot remove
/// every missing link. Carries the best arrangement reached.
class HamPathRepairError : public std::runtime_error {
public:
    HamPathRepairError(const std::string& what, std::vector<VertexId> partial)
        : std::runtime_error(what), partial_(std::move(partial)) {}
    const std::vector<VertexId>& partial_path() const { return partial_; }

private:
    std::vector<VertexId> partial_;
};

/// Returns true when two opposite-side vertices are NOT adjacent.
using ForbiddenPair = std::function<bool(VertexId, VertexId)>;

/// Hamiltonian path from u (in `left`) to v (in `right`) through a graph
/// that is complete bipartite between `left` and `right` except for the
/// pairs flagged by `forbidden`. The two sides must have equal size.
///
/// Starts from the alternating layout u, r_1, l_1, ..., r_{n-1}, l_{n-1}, v
/// (remainders in the given order) and repairs each missing link by swapping
/// the offending vertex with a same-side vertex further along the path,
/// accepting a swap only when the number of missing links drops. The result
/// is checked link by link before it is returned.
std::vector<VertexId> dense_bipartite_ham_path(std::span<const VertexId> left, std::span<const VertexId> right,
                                               VertexId u, VertexId v, const ForbiddenPair& forbidden);

/// Same, with sides and adjacency read from a side-labelled graph.
std::vector<VertexId> dense_bipartite_ham_path(const Graph& g, VertexId u, VertexId v);

}  // namespace imh
