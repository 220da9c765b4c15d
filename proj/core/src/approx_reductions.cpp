#include "imh/approx_reductions.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace imh {

namespace {

Edge lowest_edge(const Graph& g) {
    if (g.num_edges() == 0)
        throw PreconditionError("source graph has no edge to fall back on");
    return g.edges().front();
}

bool all_in_source(const Graph& g, std::span<const Edge> s) {
    return std::all_of(s.begin(), s.end(), [&](const Edge& e) {
        return e.v < g.num_vertices() && g.has_edge(e);
    });
}

void require_induced(const Graph& h, std::span<const Edge> m) {
    if (!is_induced_matching(h, m))
        throw PreconditionError("edge set is not an induced matching of the reduced graph");
}

}  // namespace

ImageReductionOutput image_reduce(const Graph& g) {
    const auto n = static_cast<VertexId>(g.num_vertices());
    ImageReductionOutput out;
    out.source = g;
    GraphBuilder b(2 * n);
    for (const Edge& e : g.edges())
        b.add_edge(e.u, e.v);
    for (VertexId u = 0; u < n; ++u) {
        out.image_map.push_back(n + u);
        b.add_edge(u, n + u);
    }
    out.graph = b.build();
    return out;
}

VertexSet matching_to_mis(const ImageReductionOutput& out, std::span<const Edge> m) {
    require_induced(out.graph, m);
    // Image vertices sit above every source id, so the lower endpoint is the
    // source end of an image edge and the lower id of any other edge.
    VertexSet result;
    for (const Edge& e : m)
        result.push_back(e.u);
    std::sort(result.begin(), result.end());
    return result;
}

HamClosureOutput ham_closure_reduce(const Graph& g) {
    const auto p = static_cast<VertexId>(g.num_vertices());
    if (p < 2)
        throw PreconditionError("ham-closure needs at least 2 source vertices");
    HamClosureOutput out;
    out.source = g;
    GraphBuilder b(2 * p);
    for (const Edge& e : g.edges())
        b.add_edge(e.u, e.v);
    for (VertexId i = 0; i < p; ++i) {
        out.b_map.push_back(p + i);
        for (VertexId j = i + 1; j < p; ++j)
            b.add_edge(p + i, p + j);
        for (VertexId u = 0; u < p; ++u)
            b.add_edge(u, p + i);
    }
    out.graph = b.build();
    for (VertexId i = 0; i < p; ++i) {
        out.ham_cycle.push_back(p + i);
        out.ham_cycle.push_back(i);
    }
    return out;
}

EdgeSet ham_closure_recover(const HamClosureOutput& out, std::span<const Edge> s) {
    if (s.size() >= 2 && all_in_source(out.source, s)) {
        EdgeSet kept(s.begin(), s.end());
        std::sort(kept.begin(), kept.end());
        return kept;
    }
    return {lowest_edge(out.source)};
}

VertexId BlowupOutput::s_vertex(VertexId source_vertex, std::size_t j) const {
    return static_cast<VertexId>(source_vertex * group_size + j);
}

VertexId BlowupOutput::t_vertex(VertexId source_vertex, std::size_t j) const {
    return static_cast<VertexId>((source.num_vertices() + source_vertex) * group_size + j);
}

VertexId BlowupOutput::owner(VertexId v) const {
    const auto group = static_cast<VertexId>(v / group_size);
    const auto n = static_cast<VertexId>(source.num_vertices());
    return group < n ? group : group - n;
}

BlowupOutput blowup_reduce(const Graph& g) {
    const std::size_t n = g.num_vertices();
    BlowupOutput out;
    out.source = g;
    out.group_size = n * n * n;
    const std::size_t total = 2 * n * out.group_size;
    GraphBuilder b(total);
    Sides sides(total, Side::S2);
    std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(total / 2), Side::S1);
    for (VertexId i = 0; i < n; ++i)
        for (std::size_t j = 0; j < out.group_size; ++j)
            b.add_edge(out.s_vertex(i, j), out.t_vertex(i, j));
    for (const Edge& e : g.edges()) {
        for (std::size_t x = 0; x < out.group_size; ++x) {
            for (std::size_t y = 0; y < out.group_size; ++y) {
                b.add_edge(out.s_vertex(e.u, x), out.t_vertex(e.v, y));
                b.add_edge(out.s_vertex(e.v, x), out.t_vertex(e.u, y));
            }
        }
    }
    out.graph = b.build(std::move(sides));
    return out;
}

VertexSet blowup_to_mis(const BlowupOutput& out, std::span<const Edge> s) {
    require_induced(out.graph, s);
    VertexSet result;
    for (const Edge& e : s)
        if (out.is_homogeneous(e))
            result.push_back(out.owner(e.u));
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

BlowupCensus blowup_census(const BlowupOutput& out, std::span<const Edge> s) {
    BlowupCensus census;
    census.homogeneous.assign(out.source.num_vertices(), 0);
    std::map<std::pair<VertexId, VertexId>, std::size_t> blocks;
    for (const Edge& e : s) {
        if (out.is_homogeneous(e)) {
            ++census.homogeneous[out.owner(e.u)];
            continue;
        }
        ++census.heterogeneous;
        // e.u is the S1 endpoint since s-groups have the lower ids.
        const std::size_t count = ++blocks[{out.owner(e.u), out.owner(e.v)}];
        census.max_per_block = std::max(census.max_per_block, count);
    }
    return census;
}

HamBipClosureOutput hambip_closure_reduce(const Graph& g) {
    const std::optional<Sides> sides = g.sides() ? g.sides() : is_bipartite(g);
    if (!sides)
        throw PreconditionError("hambip-closure needs a bipartite graph");
    VertexSet left;
    VertexSet right;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        ((*sides)[v] == Side::S1 ? left : right).push_back(v);
    if (left.size() != right.size())
        throw PreconditionError("hambip-closure needs equal sides, got " + std::to_string(left.size()) + " and " +
                                std::to_string(right.size()));
    if (left.empty())
        throw PreconditionError("hambip-closure needs p >= 1");

    const auto p = static_cast<VertexId>(left.size());
    HamBipClosureOutput out;
    out.source = g;
    out.p = p;
    GraphBuilder b(4 * p + 2);
    Sides h_sides(*sides);
    h_sides.resize(4 * p + 2, Side::S1);
    for (VertexId i = 0; i <= p; ++i) {
        out.l_map.push_back(2 * p + i);
        out.m_map.push_back(3 * p + 1 + i);
        h_sides[3 * p + 1 + i] = Side::S2;
    }
    for (const Edge& e : g.edges())
        b.add_edge(e.u, e.v);
    for (VertexId l : out.l_map)
        for (VertexId m : out.m_map)
            b.add_edge(l, m);
    for (VertexId m : out.m_map)
        for (VertexId u : left)
            b.add_edge(u, m);
    for (VertexId l : out.l_map)
        for (VertexId v : right)
            b.add_edge(v, l);
    out.graph = b.build(std::move(h_sides));

    for (VertexId i = 0; i < p; ++i) {
        out.ham_cycle.push_back(out.m_map[i]);
        out.ham_cycle.push_back(left[i]);
    }
    out.ham_cycle.push_back(out.m_map[p]);
    for (VertexId i = 0; i < p; ++i) {
        out.ham_cycle.push_back(out.l_map[i]);
        out.ham_cycle.push_back(right[i]);
    }
    out.ham_cycle.push_back(out.l_map[p]);
    return out;
}

EdgeSet hambip_recover(const HamBipClosureOutput& out, std::span<const Edge> s) {
    if (all_in_source(out.source, s)) {
        EdgeSet kept(s.begin(), s.end());
        std::sort(kept.begin(), kept.end());
        return kept;
    }
    return {lowest_edge(out.source)};
}

}  // namespace imh
