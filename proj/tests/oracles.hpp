#pragma once

// Brute-force reference answers. Everything here works from a plain
// adjacency matrix and subset enumeration so it shares no code with the
// solvers under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "imh/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const imh::Graph& g) {
    Matrix a(g.num_vertices(), std::vector<bool>(g.num_vertices(), false));
    for (const auto& e : g.edges())
        a[e.u][e.v] = a[e.v][e.u] = true;
    return a;
}

/// Adjacency rows as bitmasks, for graphs with at most 32 vertices.
inline std::vector<std::uint32_t> rows(const imh::Graph& g) {
    std::vector<std::uint32_t> r(g.num_vertices(), 0);
    for (const auto& e : g.edges()) {
        r[e.u] |= 1u << e.v;
        r[e.v] |= 1u << e.u;
    }
    return r;
}

/// Largest subset of size-n vertex set satisfying `ok(mask)`, n <= 24.
template <typename Pred>
std::size_t best_subset(std::size_t n, Pred ok) {
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size > best && ok(mask))
            best = size;
    }
    return best;
}

inline std::size_t clique_number(const imh::Graph& g) {
    const auto r = rows(g);
    const std::size_t n = g.num_vertices();
    return best_subset(n, [&](std::uint32_t mask) {
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i & 1) && (r[i] & mask) != (mask & ~(1u << i)))
                return false;
        return true;
    });
}

inline std::size_t independence_number(const imh::Graph& g) {
    const auto r = rows(g);
    const std::size_t n = g.num_vertices();
    return best_subset(n, [&](std::uint32_t mask) {
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i & 1) && (r[i] & mask))
                return false;
        return true;
    });
}

/// Induced matching number by enumerating edge subsets: a subset counts when
/// its endpoints are 2|S| distinct vertices inducing exactly |S| edges.
inline std::size_t induced_matching_number(const imh::Graph& g) {
    const Matrix a = matrix(g);
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    return best_subset(m, [&](std::uint32_t mask) {
        std::vector<imh::VertexId> ends;
        for (std::size_t i = 0; i < m; ++i)
            if (mask >> i & 1) {
                ends.push_back(edges[i].u);
                ends.push_back(edges[i].v);
            }
        std::vector<imh::VertexId> sorted = ends;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
        std::size_t induced = 0;
        for (std::size_t i = 0; i < ends.size(); ++i)
            for (std::size_t j = i + 1; j < ends.size(); ++j)
                induced += a[ends[i]][ends[j]];
        return induced == ends.size() / 2;
    });
}

/// Induced matching number as the largest vertex set inducing a 1-regular
/// subgraph, halved. Works for any graph with at most ~24 vertices.
inline std::size_t induced_matching_number_by_vertices(const imh::Graph& g) {
    const auto r = rows(g);
    const std::size_t n = g.num_vertices();
    return best_subset(n, [&](std::uint32_t mask) {
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i & 1) && std::popcount(r[i] & mask) != 1)
                return false;
        return true;
    }) / 2;
}

/// Whether `seq` is a Hamiltonian cycle, checked from the matrix.
inline bool hamiltonian_cycle(const imh::Graph& g, const std::vector<imh::VertexId>& seq) {
    const std::size_t n = g.num_vertices();
    if (seq.size() != n || n < 3)
        return false;
    const Matrix a = matrix(g);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seq[i] >= n || seen[seq[i]])
            return false;
        seen[seq[i]] = true;
        if (!a[seq[i]][seq[(i + 1) % n]])
            return false;
    }
    return true;
}

/// Bipartition check by trying to 2-colour every component.
inline bool two_colourable(const imh::Graph& g) {
    const Matrix a = matrix(g);
    const std::size_t n = g.num_vertices();
    std::vector<int> colour(n, -1);
    for (std::size_t s = 0; s < n; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w = 0; w < n; ++w) {
                if (!a[v][w])
                    continue;
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[v];
                    stack.push_back(w);
                } else if (colour[w] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool has_triangle(const imh::Graph& g) {
    const Matrix a = matrix(g);
    const std::size_t n = g.num_vertices();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (a[i][j] && a[j][k] && a[i][k])
                    return true;
    return false;
}

}  // namespace oracle
