#include "imh/graph.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace imh {

Graph::Graph(std::size_t n, std::vector<Edge> edges, std::optional<Sides> sides)
    : edges_(std::move(edges)), adjacency_(n), sides_(std::move(sides)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u == e.v)
            throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        if (e.v >= n)
            throw PreconditionError("edge endpoint " + std::to_string(e.v) + " out of range");
        if (i > 0 && edges_[i - 1] == e)
            throw PreconditionError("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto& row : adjacency_)
        std::sort(row.begin(), row.end());
    if (sides_) {
        if (sides_->size() != n)
            throw PreconditionError("side label count does not match vertex count");
        for (const Edge& e : edges_)
            if ((*sides_)[e.u] == (*sides_)[e.v])
                throw PreconditionError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                        " joins two vertices on the same side");
    }
}

bool Graph::adjacent(VertexId a, VertexId b) const {
    if (a >= adjacency_.size() || b >= adjacency_.size() || a == b)
        return false;
    const auto& ra = adjacency_[a];
    const auto& rb = adjacency_[b];
    if (ra.size() <= rb.size())
        return std::binary_search(ra.begin(), ra.end(), b);
    return std::binary_search(rb.begin(), rb.end(), a);
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    const auto n = static_cast<VertexId>(num_vertices());
    for (VertexId i = 0; i < n; ++i) {
        auto it = adjacency_[i].begin();
        for (VertexId j = i + 1; j < n; ++j) {
            while (it != adjacency_[i].end() && *it < j)
                ++it;
            if (it == adjacency_[i].end() || *it != j)
                out.emplace_back(i, j);
        }
    }
    return Graph(n, std::move(out));
}

Graph Graph::with_sides(Sides sides) const { return Graph(num_vertices(), edges_, std::move(sides)); }

void GraphBuilder::add_edge(VertexId a, VertexId b) {
    if (a == b)
        throw PreconditionError("self-loop at vertex " + std::to_string(a));
    edges_.emplace_back(a, b);
}

Graph GraphBuilder::build(std::optional<Sides> sides) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    return Graph(n_, std::move(edges_), std::move(sides));
}

std::optional<Sides> is_bipartite(const Graph& g) {
    const auto n = g.num_vertices();
    std::vector<int> color(n, -1);
    std::queue<VertexId> queue;
    for (VertexId root = 0; root < n; ++root) {
        if (color[root] != -1)
            continue;
        color[root] = 0;
        queue.push(root);
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop();
            for (VertexId w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Sides sides(n);
    for (std::size_t v = 0; v < n; ++v)
        sides[v] = color[v] == 0 ? Side::S1 : Side::S2;
    return sides;
}

bool is_matching(const Graph& g, std::span<const Edge> m) {
    std::vector<VertexId> endpoints;
    endpoints.reserve(2 * m.size());
    for (const Edge& e : m) {
        if (!g.has_edge(e))
            return false;
        endpoints.push_back(e.u);
        endpoints.push_back(e.v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    return std::adjacent_find(endpoints.begin(), endpoints.end()) == endpoints.end();
}

bool is_induced_matching(const Graph& g, std::span<const Edge> m) {
    if (!is_matching(g, m))
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (g.adjacent(m[i].u, m[j].u) || g.adjacent(m[i].u, m[j].v) || g.adjacent(m[i].v, m[j].u) ||
                g.adjacent(m[i].v, m[j].v))
                return false;
    return true;
}

namespace {

bool distinct_in_range(const Graph& g, std::span<const VertexId> s) {
    std::vector<VertexId> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    return sorted.empty() || sorted.back() < g.num_vertices();
}

}  // namespace

bool is_clique(const Graph& g, std::span<const VertexId> s) {
    if (!distinct_in_range(g, s))
        return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const VertexId> s) {
    if (!distinct_in_range(g, s))
        return false;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

bool validate_path(const Graph& g, std::span<const VertexId> path) {
    if (path.size() != g.num_vertices() || !distinct_in_range(g, path))
        return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.adjacent(path[i], path[i + 1]))
            return false;
    return true;
}

bool validate_cycle(const Graph& g, std::span<const VertexId> cycle) {
    if (!validate_path(g, cycle))
        return false;
    // A single vertex or a single edge cannot close a simple cycle.
    if (cycle.size() < 3)
        return false;
    return g.adjacent(cycle.back(), cycle.front());
}

Graph gen_random(std::size_t n, double edge_probability, std::uint64_t seed) {
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw PreconditionError("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            if (coin(rng) < edge_probability)
                edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph gen_complete(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph gen_complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    Sides sides(a + b, Side::S1);
    for (std::size_t j = 0; j < b; ++j)
        sides[a + j] = Side::S2;
    for (VertexId i = 0; i < a; ++i)
        for (VertexId j = 0; j < b; ++j)
            edges.emplace_back(i, static_cast<VertexId>(a + j));
    return Graph(a + b, std::move(edges), std::move(sides));
}

Graph gen_cycle(std::size_t n) {
    if (n < 3)
        throw PreconditionError("a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (VertexId i = 0; i < n; ++i)
        edges.emplace_back(i, static_cast<VertexId>((i + 1) % n));
    return Graph(n, std::move(edges));
}

Graph gen_path(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph gen_petersen() {
    std::vector<Edge> edges;
    for (VertexId i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
    std::vector<std::int64_t> index(g.num_vertices(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i)
        index[keep[i]] = static_cast<std::int64_t>(i);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (index[e.u] >= 0 && index[e.v] >= 0)
            edges.emplace_back(static_cast<VertexId>(index[e.u]), static_cast<VertexId>(index[e.v]));
    return Graph(keep.size(), std::move(edges));
}

Graph remove_edge(const Graph& g, Edge e) {
    std::vector<Edge> edges;
    for (const Edge& f : g.edges())
        if (f != e)
            edges.push_back(f);
    return Graph(g.num_vertices(), std::move(edges));
}

}  // namespace imh
