#include "imh/classic_paths.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace imh {

std::vector<VertexId> EdgeSequence::vertices() const {
    std::vector<VertexId> out{start};
    VertexId cur = start;
    for (const Edge& e : edges) {
        cur = e.other(cur);
        out.push_back(cur);
    }
    return out;
}

EdgeSequence eulerian_circuit(const Graph& g) {
    const auto n = static_cast<VertexId>(g.num_vertices());
    EdgeSequence out;
    if (g.num_edges() == 0)
        return out;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) % 2 != 0)
            throw PreconditionError("vertex " + std::to_string(v) + " has odd degree " +
                                    std::to_string(g.degree(v)));
    VertexId start = 0;
    while (g.degree(start) == 0)
        ++start;

    // used[v][i] marks the i-th neighbour slot of v; the edge is marked on
    // both sides when it is traversed.
    std::vector<std::vector<bool>> used(n);
    std::vector<std::size_t> cursor(n, 0);
    for (VertexId v = 0; v < n; ++v)
        used[v].assign(g.degree(v), false);
    auto mark = [&](VertexId a, VertexId b) {
        auto nb = g.neighbors(a);
        used[a][static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), b) - nb.begin())] = true;
    };

    std::vector<VertexId> stack{start};
    std::vector<VertexId> circuit;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        auto nb = g.neighbors(v);
        while (cursor[v] < nb.size() && used[v][cursor[v]])
            ++cursor[v];
        if (cursor[v] < nb.size()) {
            const VertexId w = nb[cursor[v]];
            used[v][cursor[v]] = true;
            mark(w, v);
            stack.push_back(w);
        } else {
            circuit.push_back(v);
            stack.pop_back();
        }
    }
    if (circuit.size() != g.num_edges() + 1) {
        for (VertexId v = 0; v < n; ++v)
            if (g.degree(v) > 0 && std::find(used[v].begin(), used[v].end(), false) != used[v].end())
                throw PreconditionError("edges at vertex " + std::to_string(v) +
                                        " are not connected to vertex " + std::to_string(start));
    }
    std::reverse(circuit.begin(), circuit.end());
    out.start = start;
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
        out.edges.emplace_back(circuit[i], circuit[i + 1]);
    return out;
}

LineGraphMap line_graph(const Graph& g) {
    const auto& edges = g.edges();
    std::vector<std::vector<VertexId>> incident(g.num_vertices());
    for (VertexId i = 0; i < edges.size(); ++i) {
        incident[edges[i].u].push_back(i);
        incident[edges[i].v].push_back(i);
    }
    GraphBuilder builder(edges.size());
    for (const auto& ids : incident)
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                builder.add_edge(ids[a], ids[b]);
    return {builder.build(), edges};
}

LineGraphCycle line_graph_ham_cycle(std::size_t l) {
    if (l < 3 || l % 2 == 0)
        throw PreconditionError("line_graph_ham_cycle needs an odd l >= 3, got " + std::to_string(l));
    const Graph complete = gen_complete(l);
    const EdgeSequence circuit = eulerian_circuit(complete);
    LineGraphCycle out{line_graph(complete), {}};
    for (const Edge& e : circuit.edges) {
        const auto& src = out.line.source_edges;
        out.cycle.push_back(static_cast<VertexId>(std::lower_bound(src.begin(), src.end(), e) - src.begin()));
    }
    return out;
}

std::vector<VertexId> balanced_kb_ham_path(std::size_t n, VertexId u, VertexId v,
                                           std::optional<std::vector<std::pair<VertexId, VertexId>>> pairing) {
    if (n == 0)
        throw PreconditionError("K_{n,n} needs n >= 1");
    if (u >= 2 * n || v >= 2 * n)
        throw PreconditionError("endpoint outside K_{n,n}");
    const bool u_low = u < n;
    const bool v_low = v < n;
    if (u_low == v_low)
        throw PreconditionError("endpoints " + std::to_string(u) + " and " + std::to_string(v) +
                                " lie on the same side");
    auto on_u_side = [&](VertexId x) { return (x < n) == u_low; };

    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (pairing) {
        pairs = std::move(*pairing);
        if (pairs.size() != n - 1)
            throw PreconditionError("pairing must contain n-1 pairs");
        std::vector<bool> seen(2 * n, false);
        seen[u] = seen[v] = true;
        for (auto [pv, pu] : pairs) {
            if (pv >= 2 * n || pu >= 2 * n || on_u_side(pv) || !on_u_side(pu) || seen[pv] || seen[pu])
                throw PreconditionError("pairing is not a bijection between the remaining vertices");
            seen[pv] = seen[pu] = true;
        }
    } else {
        std::vector<VertexId> rest_u;
        std::vector<VertexId> rest_v;
        for (VertexId x = 0; x < 2 * n; ++x) {
            if (x == u || x == v)
                continue;
            (on_u_side(x) ? rest_u : rest_v).push_back(x);
        }
        for (std::size_t i = 0; i + 1 < n; ++i)
            pairs.emplace_back(rest_v[i], rest_u[i]);
    }

    std::vector<VertexId> path{u};
    for (auto [pv, pu] : pairs) {
        path.push_back(pv);
        path.push_back(pu);
    }
    path.push_back(v);
    return path;
}

namespace {

// Depth-first search for an alternating u..v path, lowest id first, with a
// step limit. Used when local repair stalls.
std::optional<std::vector<VertexId>> backtrack_ham_path(std::span<const VertexId> left,
                                                        std::span<const VertexId> right, VertexId u, VertexId v,
                                                        const ForbiddenPair& forbidden) {
    constexpr std::size_t kStepLimit = 2'000'000;
    const std::size_t total = left.size() + right.size();
    std::vector<VertexId> path{u};
    std::vector<bool> used_left(left.size(), false);
    std::vector<bool> used_right(right.size(), false);
    used_left[static_cast<std::size_t>(std::find(left.begin(), left.end(), u) - left.begin())] = true;
    // next[d] is the index to try next at depth d.
    std::vector<std::size_t> next{0};
    std::size_t steps = 0;
    while (!next.empty() && steps++ < kStepLimit) {
        const std::size_t depth = path.size();
        if (depth == total)
            return path;
        const bool want_right = depth % 2 == 1;
        const auto side = want_right ? right : left;
        auto& used = want_right ? used_right : used_left;
        std::size_t& i = next.back();
        const VertexId at = path.back();
        bool advanced = false;
        for (; i < side.size(); ++i) {
            const VertexId x = side[i];
            if (used[i] || (x == v) != (depth + 1 == total))
                continue;
            if (want_right ? forbidden(at, x) : forbidden(x, at))
                continue;
            used[i] = true;
            path.push_back(x);
            ++i;
            next.push_back(0);
            advanced = true;
            break;
        }
        if (advanced)
            continue;
        next.pop_back();
        if (path.size() > 1) {
            const bool was_right = (path.size() - 1) % 2 == 1;
            const auto prev_side = was_right ? right : left;
            auto& prev_used = was_right ? used_right : used_left;
            prev_used[static_cast<std::size_t>(std::find(prev_side.begin(), prev_side.end(), path.back()) -
                                               prev_side.begin())] = false;
            path.pop_back();
        } else {
            break;
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<VertexId> dense_bipartite_ham_path(std::span<const VertexId> left, std::span<const VertexId> right,
                                               VertexId u, VertexId v, const ForbiddenPair& forbidden) {
    if (left.size() != right.size() || left.empty())
        throw PreconditionError("dense_bipartite_ham_path needs two non-empty sides of equal size");
    if (std::find(left.begin(), left.end(), u) == left.end())
        throw PreconditionError("start vertex " + std::to_string(u) + " is not on the left side");
    if (std::find(right.begin(), right.end(), v) == right.end())
        throw PreconditionError("end vertex " + std::to_string(v) + " is not on the right side");

    const std::size_t n = left.size();
    std::vector<VertexId> path{u};
    {
        std::vector<VertexId> rest_left;
        std::vector<VertexId> rest_right;
        for (VertexId x : left)
            if (x != u)
                rest_left.push_back(x);
        for (VertexId x : right)
            if (x != v)
                rest_right.push_back(x);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            path.push_back(rest_right[i]);
            path.push_back(rest_left[i]);
        }
        path.push_back(v);
    }

    // Even positions hold left vertices, odd positions right vertices.
    const std::size_t last = path.size() - 1;
    auto missing = [&](std::size_t i) {
        return i % 2 == 0 ? forbidden(path[i], path[i + 1]) : forbidden(path[i + 1], path[i]);
    };
    auto links_at = [&](std::size_t pos, std::size_t& count) {
        if (pos > 0 && missing(pos - 1))
            ++count;
        if (pos < last && missing(pos))
            ++count;
    };
    auto local_bad = [&](std::size_t a, std::size_t b) {
        std::size_t count = 0;
        links_at(a, count);
        links_at(b, count);
        // The link between adjacent positions would be counted twice.
        if ((a + 1 == b || b + 1 == a) && missing(std::min(a, b)))
            --count;
        return count;
    };
    auto total_bad = [&] {
        std::size_t count = 0;
        for (std::size_t i = 0; i < last; ++i)
            count += missing(i) ? 1 : 0;
        return count;
    };

    // Try to lower the bad-link count by moving the vertex at `pos` to a
    // same-side position elsewhere in the path.
    auto try_swap = [&](std::size_t pos) {
        if (pos == 0 || pos == last)
            return false;
        for (std::size_t j = 2 - pos % 2; j < last; j += 2) {
            if (j == pos)
                continue;
            const std::size_t before = local_bad(pos, j);
            std::swap(path[pos], path[j]);
            if (local_bad(pos, j) < before)
                return true;
            std::swap(path[pos], path[j]);
        }
        return false;
    };

    // Reversing path[a..b] with a, b of equal parity keeps sides alternating
    // and only replaces the links (a-1, a) and (b, b+1).
    auto reversal_bad = [&](std::size_t a, std::size_t b) {
        return std::size_t{missing(a - 1)} + std::size_t{missing(b)};
    };
    auto try_reverse = [&](std::size_t a, std::size_t b) {
        if (a == 0 || b >= last || a >= b)
            return false;
        const std::size_t before = reversal_bad(a, b);
        std::reverse(path.begin() + static_cast<std::ptrdiff_t>(a), path.begin() + static_cast<std::ptrdiff_t>(b) + 1);
        if (reversal_bad(a, b) < before)
            return true;
        std::reverse(path.begin() + static_cast<std::ptrdiff_t>(a), path.begin() + static_cast<std::ptrdiff_t>(b) + 1);
        return false;
    };
    // Bad link i sits between positions i and i+1: reverse a segment that
    // starts at i+1 or ends at i.
    auto try_reversals = [&](std::size_t i) {
        for (std::size_t b = i + 3; b < last; b += 2)
            if (try_reverse(i + 1, b))
                return true;
        for (std::size_t a = i % 2 == 0 ? 2 : 1; a + 2 <= i; a += 2)
            if (try_reverse(a, i))
                return true;
        return false;
    };

    for (std::size_t bad = total_bad(); bad > 0; bad = total_bad()) {
        bool improved = false;
        for (std::size_t i = 0; i < last && !improved; ++i)
            if (missing(i))
                improved = try_swap(i + 1) || try_swap(i);
        for (std::size_t i = 0; i < last && !improved; ++i)
            if (missing(i))
                improved = try_reversals(i);
        if (!improved) {
            if (auto found = backtrack_ham_path(left, right, u, v, forbidden)) {
                path = std::move(*found);
                break;
            }
            throw HamPathRepairError("no improving swap left with " + std::to_string(bad) + " missing links", path);
        }
    }
    for (std::size_t i = 0; i < last; ++i)
        if (missing(i))
            throw HamPathRepairError("path failed link validation", path);
    return path;
}

std::vector<VertexId> dense_bipartite_ham_path(const Graph& g, VertexId u, VertexId v) {
    if (!g.sides())
        throw PreconditionError("dense_bipartite_ham_path needs a side-labelled graph");
    std::vector<VertexId> left;
    std::vector<VertexId> right;
    for (VertexId x = 0; x < g.num_vertices(); ++x)
        (g.side(x) == Side::S1 ? left : right).push_back(x);
    if (u >= g.num_vertices() || g.side(u) != Side::S1)
        throw PreconditionError("start vertex must lie in S1");
    if (v >= g.num_vertices() || g.side(v) != Side::S2)
        throw PreconditionError("end vertex must lie in S2");
    return dense_bipartite_ham_path(left, right, u, v,
                                    [&](VertexId a, VertexId b) { return !g.adjacent(a, b); });
}

}  // namespace imh
