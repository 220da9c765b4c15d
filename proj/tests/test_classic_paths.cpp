#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "imh/classic_paths.hpp"
#include "imh/im_hardness.hpp"
#include "oracles.hpp"

using namespace imh;

namespace {

// Independent walk check: consecutive edges chain from the start vertex and
// the walk returns to it.
bool closed_walk(const EdgeSequence& s) {
    VertexId at = s.start;
    for (const Edge& e : s.edges) {
        if (!e.touches(at))
            return false;
        at = e.other(at);
    }
    return at == s.start;
}

bool alternates(const std::vector<VertexId>& path, std::size_t n) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if ((path[i] < n) == (path[i + 1] < n))
            return false;
    return true;
}

bool permutation_of(std::vector<VertexId> path, std::size_t total) {
    std::sort(path.begin(), path.end());
    for (std::size_t i = 0; i < total; ++i)
        if (i >= path.size() || path[i] != i)
            return false;
    return path.size() == total;
}

}  // namespace

TEST(EulerianCircuit, Triangle) {
    const auto c = eulerian_circuit(gen_complete(3));
    EXPECT_EQ(c.start, 0u);
    EXPECT_EQ(c.edges.size(), 3u);
    EXPECT_TRUE(closed_walk(c));
}

TEST(EulerianCircuit, CoversOddCompleteGraphsOnce) {
    for (std::size_t l = 3; l <= 13; l += 2) {
        const Graph k = gen_complete(l);
        const auto c = eulerian_circuit(k);
        EXPECT_TRUE(closed_walk(c));
        std::vector<Edge> sorted = c.edges;
        std::sort(sorted.begin(), sorted.end());
        EXPECT_EQ(sorted, k.edges()) << "l = " << l;
        EXPECT_EQ(c.vertices().size(), c.edges.size() + 1);
    }
    EXPECT_EQ(eulerian_circuit(gen_complete(5)).edges.size(), 10u);
}

TEST(EulerianCircuit, StartsAtLowestNonIsolatedVertex) {
    const Graph g(6, {Edge(2, 3), Edge(3, 4), Edge(2, 4)});
    const auto c = eulerian_circuit(g);
    EXPECT_EQ(c.start, 2u);
    EXPECT_TRUE(closed_walk(c));
}

TEST(EulerianCircuit, Errors) {
    EXPECT_THROW(eulerian_circuit(gen_path(2)), PreconditionError);
    const Graph two_triangles(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
    try {
        eulerian_circuit(two_triangles);
        FAIL() << "expected a precondition error";
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find('3'), std::string::npos);
    }
    EXPECT_TRUE(eulerian_circuit(Graph(4)).edges.empty());
}

TEST(LineGraph, Examples) {
    const auto p3 = line_graph(gen_path(3));
    EXPECT_EQ(p3.graph.num_vertices(), 2u);
    EXPECT_EQ(p3.graph.num_edges(), 1u);
    const auto k3 = line_graph(gen_complete(3));
    EXPECT_EQ(k3.graph, gen_complete(3));
    const auto k5 = line_graph(gen_complete(5));
    EXPECT_EQ(k5.graph.num_vertices(), 10u);
    for (VertexId v = 0; v < 10; ++v)
        EXPECT_EQ(k5.graph.degree(v), 6u);
}

TEST(LineGraph, AdjacencyIffSharedEndpoint) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const Graph g = gen_random(8, 0.4, seed);
        const auto lg = line_graph(g);
        ASSERT_EQ(lg.source_edges, g.edges());
        for (VertexId a = 0; a < lg.graph.num_vertices(); ++a)
            for (VertexId b = a + 1; b < lg.graph.num_vertices(); ++b) {
                const Edge& x = lg.source_edges[a];
                const Edge& y = lg.source_edges[b];
                const bool share = x.touches(y.u) || x.touches(y.v);
                ASSERT_EQ(lg.graph.adjacent(a, b), share);
            }
    }
}

TEST(LineGraphHamCycle, OddCompleteGraphs) {
    for (std::size_t l = 3; l <= 13; l += 2) {
        const auto r = line_graph_ham_cycle(l);
        EXPECT_EQ(r.cycle.size(), l * (l - 1) / 2);
        EXPECT_TRUE(validate_cycle(r.line.graph, r.cycle)) << "l = " << l;
        EXPECT_TRUE(oracle::hamiltonian_cycle(r.line.graph, r.cycle));
    }
    EXPECT_THROW(line_graph_ham_cycle(4), PreconditionError);
    EXPECT_THROW(line_graph_ham_cycle(1), PreconditionError);
}

TEST(BalancedKbHamPath, SmallCases) {
    EXPECT_EQ(balanced_kb_ham_path(1, 0, 1), (std::vector<VertexId>{0, 1}));
    const auto p = balanced_kb_ham_path(3, 0, 3);
    EXPECT_EQ(p, (std::vector<VertexId>{0, 4, 1, 5, 2, 3}));
    EXPECT_THROW(balanced_kb_ham_path(3, 0, 1), PreconditionError);
}

TEST(BalancedKbHamPath, AllEndpointsUpToEight) {
    for (std::size_t n = 1; n <= 8; ++n) {
        const Graph kb = gen_complete_bipartite(n, n);
        for (VertexId u = 0; u < 2 * n; ++u)
            for (VertexId v = 0; v < 2 * n; ++v) {
                if ((u < n) == (v < n))
                    continue;
                const auto p = balanced_kb_ham_path(n, u, v);
                ASSERT_TRUE(validate_path(kb, p));
                ASSERT_EQ(p.front(), u);
                ASSERT_EQ(p.back(), v);
                ASSERT_TRUE(alternates(p, n));
            }
    }
}

TEST(BalancedKbHamPath, LargerSizesAndRandomPairings) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 50; ++n) {
        const auto p = balanced_kb_ham_path(n, 0, static_cast<VertexId>(2 * n - 1));
        ASSERT_TRUE(permutation_of(p, 2 * n));
        ASSERT_TRUE(alternates(p, n));
    }
    const Graph k55 = gen_complete_bipartite(5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<VertexId> left{1, 2, 3, 4};
        std::vector<VertexId> right{5, 6, 7, 8};
        std::shuffle(left.begin(), left.end(), rng);
        std::shuffle(right.begin(), right.end(), rng);
        std::vector<std::pair<VertexId, VertexId>> pairing;
        for (std::size_t i = 0; i < 4; ++i)
            pairing.emplace_back(right[i], left[i]);
        const auto p = balanced_kb_ham_path(5, 0, 9, pairing);
        EXPECT_TRUE(validate_path(k55, p));
        EXPECT_EQ(p[1], right[0]);
    }
}

TEST(DenseBipartiteHamPath, NoForbiddenPairsMatchesBalanced) {
    std::vector<VertexId> left{0, 1, 2, 3, 4, 5, 6};
    std::vector<VertexId> right{7, 8, 9, 10, 11, 12, 13};
    const auto p = dense_bipartite_ham_path(left, right, 0, 7, [](VertexId, VertexId) { return false; });
    EXPECT_EQ(p, balanced_kb_ham_path(7, 0, 7));
}

TEST(DenseBipartiteHamPath, RandomSparseForbiddenPatterns) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 7 + trial % 6;
        std::vector<VertexId> left(n);
        std::vector<VertexId> right(n);
        for (std::size_t i = 0; i < n; ++i) {
            left[i] = static_cast<VertexId>(i);
            right[i] = static_cast<VertexId>(n + i);
        }
        // Up to three non-neighbours per vertex.
        std::set<std::pair<VertexId, VertexId>> forbidden;
        std::map<VertexId, int> missing;
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t attempt = 0; attempt < 2 * n; ++attempt) {
            const VertexId a = left[pick(rng)];
            const VertexId b = right[pick(rng)];
            if (missing[a] >= 3 || missing[b] >= 3 || !forbidden.emplace(a, b).second)
                continue;
            ++missing[a];
            ++missing[b];
        }
        const VertexId u = left[pick(rng)];
        const VertexId v = right[pick(rng)];
        auto is_forbidden = [&](VertexId a, VertexId b) {
            return forbidden.count({std::min(a, b), std::max(a, b)}) > 0;
        };
        GraphBuilder b(2 * n);
        for (VertexId x : left)
            for (VertexId y : right)
                if (!is_forbidden(x, y))
                    b.add_edge(x, y);
        const Graph g = b.build();
        const auto p = dense_bipartite_ham_path(left, right, u, v, is_forbidden);
        ASSERT_TRUE(validate_path(g, p)) << "trial " << trial;
        ASSERT_EQ(p.front(), u);
        ASSERT_EQ(p.back(), v);
    }
}

TEST(DenseBipartiteHamPath, GadgetAndConnectorOfReduction) {
    const Graph k7 = gen_complete(7);
    const auto out = build_h(k7, 1);
    for (std::uint32_t unit_set : {0u, 1u}) {
        std::vector<VertexId> left;
        std::vector<VertexId> right;
        const auto& ids = unit_set == 0 ? out.gadget_units[0] : out.connector_units[0];
        for (std::uint32_t id : ids) {
            const UnitBlock& u = out.units[id];
            for (std::uint32_t r = 0; r < u.width; ++r) {
                left.push_back(u.vertex(Side::S1, r));
                right.push_back(u.vertex(Side::S2, r));
            }
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        const auto p = dense_bipartite_ham_path(left, right, left.front(), right.back(),
                                                [&](VertexId a, VertexId b) { return !out.graph.adjacent(a, b); });
        VertexSet all(left);
        all.insert(all.end(), right.begin(), right.end());
        std::sort(all.begin(), all.end());
        const Graph sub = induced_subgraph(out.graph, all);
        std::vector<VertexId> local;
        for (VertexId x : p)
            local.push_back(static_cast<VertexId>(std::lower_bound(all.begin(), all.end(), x) - all.begin()));
        EXPECT_TRUE(validate_path(sub, local));
        EXPECT_EQ(p.size(), unit_set == 0 ? 2u * 3 * 21 : 2u * 3 * 7);
    }
}

TEST(DenseBipartiteHamPath, GraphOverloadChecksSides) {
    const Graph kb = gen_complete_bipartite(7, 7);
    const auto p = dense_bipartite_ham_path(kb, 0, 7);
    EXPECT_TRUE(validate_path(kb, p));
    EXPECT_THROW(dense_bipartite_ham_path(kb, 7, 0), PreconditionError);
}
