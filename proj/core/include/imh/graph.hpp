#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace imh {

using VertexId = std::uint32_t;

enum class Side : std::uint8_t { S1 = 1, S2 = 2 };

inline Side opposite(Side s) { return s == Side::S1 ? Side::S2 : Side::S1; }

/// Undirected edge, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool touches(VertexId x) const { return u == x || v == x; }
    VertexId other(VertexId x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexSet = std::vector<VertexId>;
using EdgeSet = std::vector<Edge>;
using Sides = std::vector<Side>;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on dense ids 0..n-1, immutable once built.
///
/// Edges are kept sorted and deduplicated-by-construction (the constructor
/// rejects duplicates and self-loops). Side labels are optional; when
/// present every edge must join an S1 vertex to an S2 vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : Graph(n, {}) {}
    Graph(std::size_t n, std::vector<Edge> edges, std::optional<Sides> sides = std::nullopt);

    std::size_t num_vertices() const { return adjacency_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }

    bool adjacent(VertexId a, VertexId b) const;
    bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

    const std::optional<Sides>& sides() const { return sides_; }
    Side side(VertexId v) const { return (*sides_)[v]; }

    Graph complement() const;
    Graph with_sides(Sides sides) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_ && a.sides_ == b.sides_;
    }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::optional<Sides> sides_;
};

/// Incremental builder; duplicates are ignored so reduction code can add
/// edges without bookkeeping.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t n) : n_(n) {}

    void add_edge(VertexId a, VertexId b);
    std::size_t num_vertices() const { return n_; }
    Graph build(std::optional<Sides> sides = std::nullopt);

private:
    std::size_t n_;
    std::vector<Edge> edges_;
};

// Validity predicates for every witness kind.

std::optional<Sides> is_bipartite(const Graph& g);
bool is_induced_matching(const Graph& g, std::span<const Edge> m);
bool is_matching(const Graph& g, std::span<const Edge> m);
bool is_clique(const Graph& g, std::span<const VertexId> s);
bool is_independent_set(const Graph& g, std::span<const VertexId> s);
bool validate_cycle(const Graph& g, std::span<const VertexId> cycle);
bool validate_path(const Graph& g, std::span<const VertexId> path);

// Generators. Random graphs use std::mt19937_64 seeded with `seed` and
// visit vertex pairs (i,j), i<j, in lexicographic order, keeping a pair when
// a uniform draw in [0,1) falls below the probability.

Graph gen_random(std::size_t n, double edge_probability, std::uint64_t seed);
Graph gen_complete(std::size_t n);
Graph gen_complete_bipartite(std::size_t a, std::size_t b);
Graph gen_cycle(std::size_t n);
Graph gen_path(std::size_t n);
Graph gen_petersen();

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
Graph remove_edge(const Graph& g, Edge e);

}  // namespace imh
