#include "imh/im_hardness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "imh/classic_paths.hpp"

namespace imh {

std::size_t im_hard_target(std::size_t k) { return 6 * k * (2 * k + 1); }

std::size_t im_hard_vertex_count(std::size_t k, std::size_t n, std::size_t m) {
    return 6 * k * (2 * k + 1) * (n + m);
}

std::uint32_t ImReductionOutput::unit_for(std::uint32_t gadget, std::uint32_t t) const {
    const auto [k1, k2] = gadgets.at(gadget);
    if (t == k1)
        return gadget_units[gadget][0];
    if (t == k2)
        return gadget_units[gadget][1];
    throw PreconditionError("gadget (" + std::to_string(k1) + "," + std::to_string(k2) + ") has no unit for " +
                            std::to_string(t));
}

std::vector<IntPair> build_gadget_cycle(std::size_t l) {
    const LineGraphCycle lc = line_graph_ham_cycle(l);
    std::vector<IntPair> pairs;
    pairs.reserve(lc.cycle.size());
    for (VertexId v : lc.cycle) {
        const Edge& e = lc.line.source_edges[v];
        pairs.emplace_back(e.u + 1, e.v + 1);
    }
    return pairs;
}

std::vector<std::uint32_t> shared_integers(const std::vector<IntPair>& cycle) {
    std::vector<std::uint32_t> out;
    out.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const IntPair& a = cycle[i];
        const IntPair& b = cycle[(i + 1) % cycle.size()];
        if (a.first == b.first || a.first == b.second)
            out.push_back(a.first);
        else if (a.second == b.first || a.second == b.second)
            out.push_back(a.second);
        else
            throw PreconditionError("consecutive gadget pairs share no integer");
    }
    return out;
}

namespace {

// Joins the S1 side of `x` to the S2 side of `y` wherever the represented
// items differ (or everywhere when x and y are the same unit).
void join_units(GraphBuilder& b, const UnitBlock& x, const UnitBlock& y, bool same_unit) {
    for (std::uint32_t a = 0; a < x.width; ++a)
        for (std::uint32_t c = 0; c < y.width; ++c)
            if (same_unit || a != c)
                b.add_edge(x.vertex(Side::S1, a), y.vertex(Side::S2, c));
}

std::vector<VertexId> unit_side_vertices(const ImReductionOutput& out, std::span<const std::uint32_t> unit_ids,
                                         Side side) {
    std::vector<VertexId> vs;
    for (std::uint32_t id : unit_ids) {
        const UnitBlock& u = out.units[id];
        for (std::uint32_t r = 0; r < u.width; ++r)
            vs.push_back(u.vertex(side, r));
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

}  // namespace

ImReductionOutput build_h(const Graph& g, std::size_t k) {
    if (k < 1)
        throw PreconditionError("im-hard reduction needs k >= 1");
    if (g.num_vertices() < 7 || g.num_edges() < 3)
        throw PreconditionError("im-hard reduction needs at least 7 vertices and 3 edges, got " +
                                std::to_string(g.num_vertices()) + " vertices and " +
                                std::to_string(g.num_edges()) + " edges");

    ImReductionOutput out;
    out.source = g;
    out.k = k;
    out.l = 2 * k + 1;
    out.target = im_hard_target(k);
    const auto n = static_cast<std::uint32_t>(g.num_vertices());
    const auto m = static_cast<std::uint32_t>(g.num_edges());
    const auto l = static_cast<std::uint32_t>(out.l);

    for (std::uint32_t k1 = 1; k1 <= l; ++k1)
        for (std::uint32_t k2 = k1 + 1; k2 <= l; ++k2)
            out.gadgets.emplace_back(k1, k2);
    const auto num_gadgets = static_cast<std::uint32_t>(out.gadgets.size());

    const std::vector<IntPair> cycle_pairs = build_gadget_cycle(out.l);
    out.shared_integers = shared_integers(cycle_pairs);
    for (const IntPair& p : cycle_pairs)
        out.gadget_cycle.push_back(static_cast<std::uint32_t>(
            std::lower_bound(out.gadgets.begin(), out.gadgets.end(), p) - out.gadgets.begin()));

    VertexId next_id = 0;
    auto add_unit = [&](UnitRole role, std::uint32_t width) {
        out.units.push_back({role, next_id, width});
        next_id += 2 * width;
        return static_cast<std::uint32_t>(out.units.size() - 1);
    };
    for (std::uint32_t gi = 0; gi < num_gadgets; ++gi) {
        std::array<std::uint32_t, 3> ids{};
        const GadgetRole roles[3] = {GadgetRole::ForK1, GadgetRole::ForK2, GadgetRole::Auxiliary};
        for (int j = 0; j < 3; ++j) {
            UnitRole role;
            role.kind = UnitKind::Gadget;
            role.owner = gi;
            role.pair = out.gadgets[gi];
            role.role = roles[j];
            role.unit_index = static_cast<std::uint32_t>(j);
            ids[static_cast<std::size_t>(j)] = add_unit(role, m);
        }
        out.gadget_units.push_back(ids);
    }
    for (std::uint32_t ci = 0; ci < num_gadgets; ++ci) {
        out.connectors.push_back({ci, (ci + 1) % num_gadgets, out.shared_integers[ci]});
        std::array<std::uint32_t, 3> ids{};
        for (std::uint32_t j = 0; j < 3; ++j) {
            UnitRole role;
            role.kind = UnitKind::Connector;
            role.owner = ci;
            role.integer = out.shared_integers[ci];
            role.unit_index = j;
            ids[j] = add_unit(role, n);
        }
        out.connector_units.push_back(ids);
    }

    const std::size_t total = next_id;
    Sides sides(total);
    out.provenance.resize(total);
    for (std::uint32_t id = 0; id < out.units.size(); ++id) {
        const UnitBlock& u = out.units[id];
        for (std::uint32_t r = 0; r < u.width; ++r)
            for (Side s : {Side::S1, Side::S2}) {
                const VertexId v = u.vertex(s, r);
                sides[v] = s;
                out.provenance[v] = {u.role, id, s, r};
            }
    }

    GraphBuilder b(total);
    // Gadgets: complete bipartite units, cross-unit edges between different
    // represented edges.
    for (const auto& ids : out.gadget_units)
        for (std::uint32_t x : ids)
            for (std::uint32_t y : ids)
                join_units(b, out.units[x], out.units[y], x == y);

    // Connector groups: every unit of every connector for t is wired to every
    // other such unit by different represented vertices. This covers the
    // cross-unit edges inside a single connector as well.
    for (std::uint32_t t = 1; t <= l; ++t) {
        std::vector<std::uint32_t> group;
        for (std::uint32_t ci = 0; ci < num_gadgets; ++ci)
            if (out.connectors[ci].integer == t)
                group.insert(group.end(), out.connector_units[ci].begin(), out.connector_units[ci].end());
        for (std::uint32_t x : group)
            for (std::uint32_t y : group)
                join_units(b, out.units[x], out.units[y], x == y);
    }

    // Boundary: a gadget vertex representing edge (a,b), a < b, sees every
    // opposite-side connector vertex not representing a in the k1 unit, and
    // not representing b in the k2 unit.
    for (std::uint32_t ci = 0; ci < num_gadgets; ++ci) {
        const ConnectorInfo& c = out.connectors[ci];
        for (std::uint32_t pos : {c.gadget_a, c.gadget_b}) {
            const UnitBlock& gu = out.units[out.unit_for(out.gadget_cycle[pos], c.integer)];
            const bool lower = gu.role.role == GadgetRole::ForK1;
            for (std::uint32_t ei = 0; ei < m; ++ei) {
                const VertexId end = lower ? g.edges()[ei].u : g.edges()[ei].v;
                for (std::uint32_t cu : out.connector_units[ci]) {
                    const UnitBlock& unit = out.units[cu];
                    for (std::uint32_t w = 0; w < n; ++w) {
                        if (w == end)
                            continue;
                        b.add_edge(gu.vertex(Side::S1, ei), unit.vertex(Side::S2, w));
                        b.add_edge(gu.vertex(Side::S2, ei), unit.vertex(Side::S1, w));
                    }
                }
            }
        }
    }
    out.graph = b.build(std::move(sides));

    // Hamiltonian cycle: a path through each gadget from its entry unit (S1)
    // to its exit unit (S2), then a path through the connector to the next
    // gadget's entry vertex.
    const Graph& h = out.graph;
    const ForbiddenPair missing = [&h](VertexId a, VertexId c) { return !h.adjacent(a, c); };
    const std::size_t positions = out.gadget_cycle.size();
    std::vector<VertexId> entry(positions);
    std::vector<VertexId> exit(positions);
    for (std::size_t i = 0; i < positions; ++i) {
        const std::uint32_t gi = out.gadget_cycle[i];
        const std::uint32_t in_t = out.shared_integers[(i + positions - 1) % positions];
        const std::uint32_t out_t = out.shared_integers[i];
        entry[i] = out.units[out.unit_for(gi, in_t)].vertex(Side::S1, 0);
        exit[i] = out.units[out.unit_for(gi, out_t)].vertex(Side::S2, 0);
    }
    for (std::size_t i = 0; i < positions; ++i) {
        const std::uint32_t gi = out.gadget_cycle[i];
        const auto gl = unit_side_vertices(out, out.gadget_units[gi], Side::S1);
        const auto gr = unit_side_vertices(out, out.gadget_units[gi], Side::S2);
        const auto p = dense_bipartite_ham_path(gl, gr, entry[i], exit[i], missing);
        out.ham_cycle.insert(out.ham_cycle.end(), p.begin(), p.end());

        const auto cl = unit_side_vertices(out, out.connector_units[i], Side::S1);
        const auto cr = unit_side_vertices(out, out.connector_units[i], Side::S2);
        const VertexId next_entry = entry[(i + 1) % positions];
        const auto start = std::find_if(cl.begin(), cl.end(), [&](VertexId v) { return h.adjacent(v, exit[i]); });
        const auto stop = std::find_if(cr.begin(), cr.end(), [&](VertexId v) { return h.adjacent(v, next_entry); });
        if (start == cl.end() || stop == cr.end())
            throw PreconditionError("connector " + std::to_string(i) + " has no vertex adjacent to its gadgets");
        const auto q = dense_bipartite_ham_path(cl, cr, *start, *stop, missing);
        out.ham_cycle.insert(out.ham_cycle.end(), q.begin(), q.end());
    }
    if (!validate_cycle(h, out.ham_cycle))
        throw HamPathRepairError("assembled cycle failed validation", out.ham_cycle);
    return out;
}

namespace {

std::uint32_t edge_index(const Graph& g, VertexId a, VertexId c) {
    const Edge e(a, c);
    const auto it = std::lower_bound(g.edges().begin(), g.edges().end(), e);
    if (it == g.edges().end() || *it != e)
        throw PreconditionError("vertices " + std::to_string(a) + " and " + std::to_string(c) + " are not adjacent");
    return static_cast<std::uint32_t>(it - g.edges().begin());
}

Edge unit_edge(const UnitBlock& u, std::uint32_t represents) {
    return {u.vertex(Side::S1, represents), u.vertex(Side::S2, represents)};
}

}  // namespace

EdgeSet lift_clique_to_matching(const ImReductionOutput& out, std::span<const VertexId> clique) {
    if (clique.size() != out.l)
        throw PreconditionError("lift_clique_to_matching expects a clique of size 2k+1 = " + std::to_string(out.l));
    if (!is_clique(out.source, clique))
        throw PreconditionError("lift_clique_to_matching input is not a clique of the source graph");
    VertexSet a(clique.begin(), clique.end());
    std::sort(a.begin(), a.end());

    EdgeSet matching;
    for (std::uint32_t gi = 0; gi < out.gadgets.size(); ++gi) {
        const auto [k1, k2] = out.gadgets[gi];
        const std::uint32_t ei = edge_index(out.source, a[k1 - 1], a[k2 - 1]);
        for (std::uint32_t id : out.gadget_units[gi])
            matching.push_back(unit_edge(out.units[id], ei));
    }
    for (std::uint32_t ci = 0; ci < out.connectors.size(); ++ci) {
        const VertexId rep = a[out.connectors[ci].integer - 1];
        for (std::uint32_t id : out.connector_units[ci])
            matching.push_back(unit_edge(out.units[id], rep));
    }
    std::sort(matching.begin(), matching.end());
    if (!is_induced_matching(out.graph, matching))
        throw ReductionSoundnessError("lifted matching is not induced in H");
    return matching;
}

VertexSet extract_clique_from_matching(const ImReductionOutput& out, std::span<const Edge> matching) {
    if (matching.size() < out.target)
        throw PreconditionError("extract_clique_from_matching needs at least " + std::to_string(out.target) +
                                " edges, got " + std::to_string(matching.size()));
    if (!is_induced_matching(out.graph, matching))
        throw PreconditionError("extract_clique_from_matching input is not an induced matching of H");

    std::vector<std::size_t> gadget_count(out.gadgets.size(), 0);
    std::vector<std::set<std::uint32_t>> gadget_edge(out.gadgets.size());
    std::vector<std::size_t> group_count(out.l, 0);
    std::vector<std::set<std::uint32_t>> group_vertex(out.l);
    for (const Edge& e : matching) {
        const ImVertexInfo& x = out.provenance[e.u];
        const ImVertexInfo& y = out.provenance[e.v];
        if (x.unit_id != y.unit_id)
            throw ReductionSoundnessError("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                          " crosses bipartite units");
        if (x.represents != y.represents)
            throw ReductionSoundnessError("matching edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                          " joins representatives of different items");
        if (x.unit.kind == UnitKind::Gadget) {
            ++gadget_count[x.unit.owner];
            gadget_edge[x.unit.owner].insert(x.represents);
        } else {
            ++group_count[x.unit.integer - 1];
            group_vertex[x.unit.integer - 1].insert(x.represents);
        }
    }
    for (std::size_t gi = 0; gi < out.gadgets.size(); ++gi)
        if (gadget_count[gi] != 3 || gadget_edge[gi].size() != 1)
            throw ReductionSoundnessError("gadget " + std::to_string(gi) + " holds " +
                                          std::to_string(gadget_count[gi]) + " matching edges over " +
                                          std::to_string(gadget_edge[gi].size()) + " represented edges");
    VertexSet a(out.l);
    for (std::size_t t = 0; t < out.l; ++t) {
        if (group_count[t] != 3 * out.k || group_vertex[t].size() != 1)
            throw ReductionSoundnessError("connector group " + std::to_string(t + 1) + " holds " +
                                          std::to_string(group_count[t]) + " matching edges over " +
                                          std::to_string(group_vertex[t].size()) + " represented vertices");
        a[t] = *group_vertex[t].begin();
    }
    for (std::size_t gi = 0; gi < out.gadgets.size(); ++gi) {
        const auto [k1, k2] = out.gadgets[gi];
        const Edge selected = out.source.edges()[*gadget_edge[gi].begin()];
        if (selected != Edge(a[k1 - 1], a[k2 - 1]))
            throw ReductionSoundnessError("gadget (" + std::to_string(k1) + "," + std::to_string(k2) +
                                          ") selects an edge not joining its connector groups' vertices");
    }
    VertexSet clique = a;
    std::sort(clique.begin(), clique.end());
    if (std::adjacent_find(clique.begin(), clique.end()) != clique.end() || !is_clique(out.source, clique))
        throw ReductionSoundnessError("extracted vertices do not form a clique");
    return clique;
}

MatchingCensus matching_census(const ImReductionOutput& out, std::span<const Edge> matching) {
    const std::size_t num_gadgets = out.gadgets.size();
    MatchingCensus census;
    census.gadgets.resize(num_gadgets);
    census.groups.resize(out.l);
    for (std::uint32_t t = 1; t <= out.l; ++t)
        census.groups[t - 1].integer = t;

    auto region = [&](VertexId v) -> std::size_t {
        const ImVertexInfo& info = out.provenance[v];
        return info.unit.kind == UnitKind::Gadget ? info.unit.owner : num_gadgets + info.unit.integer - 1;
    };

    std::vector<std::size_t> unit_matched(out.units.size(), 0);
    std::vector<std::size_t> unit_boundary(out.units.size(), 0);
    std::vector<bool> inner(matching.size(), false);
    for (std::size_t i = 0; i < matching.size(); ++i) {
        const Edge& e = matching[i];
        const std::size_t ru = region(e.u);
        const std::size_t rv = region(e.v);
        ++unit_matched[out.provenance[e.u].unit_id];
        ++unit_matched[out.provenance[e.v].unit_id];
        if (ru == rv) {
            inner[i] = true;
            ++census.inner_edges;
            if (ru < num_gadgets)
                ++census.gadgets[ru].inner_edges;
            else
                ++census.groups[ru - num_gadgets].inner_edges;
            continue;
        }
        ++census.boundary_edges;
        for (VertexId x : {e.u, e.v}) {
            const ImVertexInfo& info = out.provenance[x];
            ++unit_boundary[info.unit_id];
            if (info.unit.kind == UnitKind::Gadget) {
                if (info.unit.role == GadgetRole::ForK1)
                    census.gadgets[info.unit.owner].bad_in_k1 = true;
                else if (info.unit.role == GadgetRole::ForK2)
                    census.gadgets[info.unit.owner].bad_in_k2 = true;
            } else {
                ++census.groups[info.unit.integer - 1].attached_boundary_edges;
            }
        }
    }
    for (GadgetCensus& gc : census.gadgets) {
        if (gc.bad_in_k1 && gc.bad_in_k2)
            gc.status = GadgetStatus::CompletelyBad;
        else if (gc.bad_in_k1 || gc.bad_in_k2)
            gc.status = GadgetStatus::BadInOneSide;
    }

    std::vector<bool> occupied(out.units.size(), false);
    for (std::uint32_t id = 0; id < out.units.size(); ++id) {
        const UnitBlock& u = out.units[id];
        if (u.role.kind != UnitKind::Connector)
            continue;
        ConnectorGroupCensus& gc = census.groups[u.role.integer - 1];
        if (unit_boundary[id] >= 2)
            ++gc.full_units;
        else if (unit_matched[id] == 0)
            ++gc.empty_units;
        else if (unit_boundary[id] == 1) {
            ++gc.occupied_units;
            occupied[id] = true;
        }
    }
    for (std::size_t i = 0; i < matching.size(); ++i) {
        if (!inner[i])
            continue;
        const ImVertexInfo& x = out.provenance[matching[i].u];
        const ImVertexInfo& y = out.provenance[matching[i].v];
        if (x.unit.kind != UnitKind::Connector)
            continue;
        if (occupied[x.unit_id] || occupied[y.unit_id]) {
            ++census.groups[x.unit.integer - 1].dangling_edges;
            ++census.dangling_edges;
        }
    }
    return census;
}

std::string to_string(GadgetStatus s) {
    switch (s) {
        case GadgetStatus::Good: return "good";
        case GadgetStatus::BadInOneSide: return "bad_in_one_side";
        case GadgetStatus::CompletelyBad: return "completely_bad";
    }
    return "good";
}

std::vector<std::vector<std::size_t>> region_partition(const ImReductionOutput& out) {
    const std::size_t num_gadgets = out.gadgets.size();
    std::vector<std::vector<std::size_t>> parts(num_gadgets + out.l);
    const auto& edges = out.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const ImVertexInfo& x = out.provenance[edges[i].u];
        const ImVertexInfo& y = out.provenance[edges[i].v];
        const ImVertexInfo& key = x.unit.kind == UnitKind::Connector ? x : y;
        if (key.unit.kind == UnitKind::Connector)
            parts[num_gadgets + key.unit.integer - 1].push_back(i);
        else
            parts[x.unit.owner].push_back(i);
    }
    return parts;
}

}  // namespace imh
