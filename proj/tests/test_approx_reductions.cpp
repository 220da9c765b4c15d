#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "imh/approx_reductions.hpp"
#include "imh/solvers.hpp"
#include "imh/verify.hpp"
#include "oracles.hpp"

using namespace imh;

TEST(ImageReduction, Examples) {
    const auto empty3 = image_reduce(Graph(3));
    EXPECT_EQ(oracle::induced_matching_number(empty3.graph), 3u);
    const auto k3 = image_reduce(gen_complete(3));
    EXPECT_EQ(k3.graph.num_vertices(), 6u);
    EXPECT_EQ(oracle::induced_matching_number(k3.graph), 1u);
}

TEST(ImageReduction, StructureAndOptEquality) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const Graph g = gen_random(1 + seed % 9, 0.45, seed);
        const auto out = image_reduce(g);
        const std::size_t n = g.num_vertices();
        ASSERT_EQ(out.graph.num_vertices(), 2 * n);
        for (VertexId u = 0; u < n; ++u) {
            EXPECT_EQ(out.image_map[u], n + u);
            EXPECT_EQ(out.graph.degree(out.image_map[u]), 1u);
            EXPECT_TRUE(out.graph.adjacent(u, out.image_map[u]));
        }
        EXPECT_EQ(oracle::induced_matching_number_by_vertices(out.graph), oracle::independence_number(g));
        const auto best = max_induced_matching(out.graph);
        const VertexSet mis = matching_to_mis(out, best.edges);
        EXPECT_EQ(mis.size(), best.edges.size());
        EXPECT_TRUE(is_independent_set(g, mis));
    }
}

TEST(HamClosure, StructureAndOptEquality) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const std::size_t p = 2 + seed % 7;
        const Graph g = gen_random(p, 0.4, seed);
        const auto out = ham_closure_reduce(g);
        ASSERT_EQ(out.graph.num_vertices(), 2 * p);
        EXPECT_TRUE(validate_cycle(out.graph, out.ham_cycle));
        EXPECT_TRUE(is_clique(out.graph, out.b_map));
        for (VertexId b : out.b_map)
            for (VertexId u = 0; u < p; ++u)
                EXPECT_TRUE(out.graph.adjacent(b, u));
        // An edgeless G has nothing to match but H always has an edge.
        const std::size_t expected = g.num_edges() == 0 ? 1 : oracle::induced_matching_number_by_vertices(g);
        EXPECT_EQ(oracle::induced_matching_number_by_vertices(out.graph), expected) << "seed " << seed;
    }
    EXPECT_THROW(ham_closure_reduce(Graph(1)), PreconditionError);
}

TEST(HamClosure, MatchingsThroughAddedVerticesAreSingletons) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = gen_random(6, 0.5, seed);
        const auto out = ham_closure_reduce(g);
        const auto a = oracle::matrix(out.graph);
        const std::size_t n = out.graph.num_vertices();
        // Vertex subsets inducing a perfect matching that touch an added vertex.
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if ((mask >> 6) == 0 || std::popcount(mask) <= 2)
                continue;
            bool regular = true;
            for (std::size_t i = 0; i < n && regular; ++i) {
                if (!(mask >> i & 1))
                    continue;
                std::size_t deg = 0;
                for (std::size_t j = 0; j < n; ++j)
                    deg += (mask >> j & 1) && a[i][j];
                regular = deg == 1;
            }
            ASSERT_FALSE(regular) << "mask " << mask;
        }
    }
}

TEST(HamClosure, Recovery) {
    const Graph g = gen_path(5);
    const auto out = ham_closure_reduce(g);
    const EdgeSet pair{Edge(0, 1), Edge(3, 4)};
    EXPECT_EQ(ham_closure_recover(out, pair), pair);
    EXPECT_EQ(ham_closure_recover(out, EdgeSet{Edge(0, 5)}), (EdgeSet{Edge(0, 1)}));
    EXPECT_EQ(ham_closure_recover(out, EdgeSet{Edge(2, 3)}), (EdgeSet{Edge(0, 1)}));
    const auto edgeless = ham_closure_reduce(Graph(3));
    EXPECT_THROW(ham_closure_recover(edgeless, EdgeSet{Edge(0, 3)}), PreconditionError);
}

TEST(Blowup, SizeAndStructure) {
    const Graph g(2, {Edge(0, 1)});
    const auto out = blowup_reduce(g);
    EXPECT_EQ(out.graph.num_vertices(), 32u);
    EXPECT_EQ(out.group_size, 8u);
    EXPECT_TRUE(is_bipartite(out.graph));
    for (VertexId i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            EXPECT_EQ(out.s_vertex(i, j), i * 8 + j);
            EXPECT_EQ(out.t_vertex(i, j), (2 + i) * 8 + j);
            EXPECT_EQ(out.graph.degree(out.s_vertex(i, j)), 1u + 8u);
            EXPECT_TRUE(out.is_homogeneous(Edge(out.s_vertex(i, j), out.t_vertex(i, j))));
        }
    EXPECT_EQ(out.graph.num_edges(), 2u * 8 + 2u * 64);
}

TEST(Blowup, OptBoundsAndRecovery) {
    const std::size_t n = 2;
    const std::size_t cube = n * n * n;
    for (const Graph& g : {Graph(2), Graph(2, {Edge(0, 1)})}) {
        const auto out = blowup_reduce(g);
        const std::size_t alpha = oracle::independence_number(g);
        const auto best = max_induced_matching(out.graph);
        ASSERT_EQ(best.status, SolveStatus::Optimal);
        EXPECT_GE(best.value, cube * alpha);
        EXPECT_LE(best.value, cube * alpha + n * (n - 1));
        const BlowupCensus census = blowup_census(out, best.edges);
        EXPECT_LE(census.max_per_block, 1u);
        for (std::size_t h : census.homogeneous)
            EXPECT_TRUE(h == 0 || h == cube);
        const VertexSet mis = blowup_to_mis(out, best.edges);
        EXPECT_TRUE(is_independent_set(g, mis));
    }
}

TEST(Blowup, FullHomogeneousBlocksStayInduced) {
    const Graph g = gen_path(3);
    const auto out = blowup_reduce(g);
    EdgeSet m;
    for (VertexId i : {0u, 2u})
        for (std::size_t j = 0; j < out.group_size; ++j)
            m.push_back(Edge(out.s_vertex(i, j), out.t_vertex(i, j)));
    std::sort(m.begin(), m.end());
    EXPECT_TRUE(is_induced_matching(out.graph, m));
    EXPECT_EQ(blowup_to_mis(out, m), (VertexSet{0, 2}));
}

TEST(HamBipClosure, StructureAndOptEquality) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const std::size_t p = 1 + seed % 4;
        const Graph g = gen_random_bipartite(p, 0.5, seed);
        const auto out = hambip_closure_reduce(g);
        ASSERT_EQ(out.graph.num_vertices(), 4 * p + 2);
        ASSERT_TRUE(out.graph.sides());
        std::size_t s1 = 0;
        for (VertexId v = 0; v < out.graph.num_vertices(); ++v)
            s1 += out.graph.side(v) == Side::S1;
        EXPECT_EQ(s1, 2 * p + 1);
        EXPECT_TRUE(validate_cycle(out.graph, out.ham_cycle));
        for (VertexId l : out.l_map)
            for (VertexId m : out.m_map)
                EXPECT_TRUE(out.graph.adjacent(l, m));
        const std::size_t expected = g.num_edges() == 0 ? 1 : oracle::induced_matching_number_by_vertices(g);
        EXPECT_EQ(oracle::induced_matching_number_by_vertices(out.graph), expected) << "seed " << seed;
    }
}

TEST(HamBipClosure, PerfectMatchingExampleAndErrors) {
    GraphBuilder b(6);
    for (VertexId i = 0; i < 3; ++i)
        b.add_edge(i, 3 + i);
    const Graph g = b.build();
    const auto out = hambip_closure_reduce(g);
    EXPECT_EQ(out.graph.num_vertices(), 14u);
    EXPECT_EQ(oracle::induced_matching_number_by_vertices(out.graph), 3u);
    EXPECT_EQ(max_induced_matching(out.graph).value, 3u);
    EXPECT_EQ(hambip_recover(out, EdgeSet{Edge(out.l_map[0], out.m_map[0])}), (EdgeSet{Edge(0, 3)}));
    EXPECT_THROW(hambip_closure_reduce(gen_complete(3)), PreconditionError);
    EXPECT_THROW(hambip_closure_reduce(gen_complete_bipartite(2, 3)), PreconditionError);
}
