#pragma once

#include <chrono>
#include <cstdint>
#include <string_view>
#include <vector>

#include "imh/bitset.hpp"
#include "imh/graph.hpp"

namespace imh {

/// Node budget applied when the caller gives none.
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class SolveStatus { Optimal, BudgetExhausted };
enum class Verdict { Yes, No, Unknown };

std::string_view to_string(SolveStatus s);
std::string_view to_string(Verdict v);

/// Outcome of an optimization solve. `vertices` carries clique and
/// independent-set witnesses, `edges` carries induced-matching witnesses.
/// When the budget runs out `value` is the best size found, not a bound.
struct SolveResult {
    std::size_t value = 0;
    VertexSet vertices;
    EdgeSet edges;
    SolveStatus status = SolveStatus::Optimal;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Outcome of a decision solve. A Yes verdict carries a witness of size
/// at least the target; No means the search space was exhausted; Unknown
/// means the node budget ran out first.
struct DecisionResult {
    Verdict verdict = Verdict::Unknown;
    VertexSet vertices;
    EdgeSet edges;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
};

SolveResult max_clique(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);
SolveResult max_independent_set(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);
SolveResult max_induced_matching(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

DecisionResult has_clique(const Graph& g, std::size_t target, std::uint64_t budget = kDefaultNodeBudget);
DecisionResult has_independent_set(const Graph& g, std::size_t target, std::uint64_t budget = kDefaultNodeBudget);
DecisionResult has_induced_matching(const Graph& g, std::size_t target, std::uint64_t budget = kDefaultNodeBudget);

/// Square of the line graph: one vertex per edge of g (in g.edges() order),
/// two joined when the edges share an endpoint or a g-edge links them.
/// Independent sets of the result are exactly the induced matchings of g.
Graph conflict_graph(const Graph& g);

/// Decision variant of maximum induced matching that bounds with a
/// caller-supplied partition of g's edges (indices into g.edges()).
///
/// For any partition, the induced matching number is at most the sum over
/// parts of the induced matching number restricted to that part's edges;
/// each part's share is computed exactly by a sub-search over the
/// candidates still open, and the search branches on the candidates of one
/// part at a time. Edges missing from every part form an extra part. Nodes
/// of the sub-searches count toward the budget.
DecisionResult has_induced_matching_partitioned(const Graph& g, std::size_t target,
                                                const std::vector<std::vector<std::size_t>>& parts,
                                                std::uint64_t budget = kDefaultNodeBudget);

namespace detail {

/// Branch-and-bound maximum clique engine over bitset adjacency rows.
///
/// Vertices are renumbered once so that the highest-degree vertex comes
/// first (ties by id); every search colours candidates greedily in that
/// order, re-colouring vertices that would otherwise need branching
/// (Tomita's Re-NUMBER), and branches on the highest colours first.
class CliqueEngine {
public:
    explicit CliqueEngine(const std::vector<Bitset>& rows);

    std::size_t size() const { return n_; }

    struct Outcome {
        std::vector<std::size_t> clique;  // original ids, sorted
        bool exhausted = false;           // node budget ran out
        std::uint64_t nodes = 0;
        /// Proven upper bound on the clique number of the candidate set
        /// (for decision searches that fail: target - 1).
        std::size_t upper_bound = 0;
    };

    /// Searches the subgraph induced by `candidates` (original ids). With
    /// target > 0 stops at the first clique of that size; otherwise
    /// maximizes.
    Outcome search(const Bitset& candidates, std::size_t target, std::uint64_t budget) const;

    /// Size of a greedy colouring of `candidates`; an upper bound on the
    /// clique number.
    std::size_t colour_bound(const Bitset& candidates) const;

private:
    friend class SearchState;
    std::size_t n_ = 0;
    std::vector<std::size_t> order_;     // position -> original id
    std::vector<std::size_t> position_;  // original id -> position
    std::vector<Bitset> adj_;            // by position
};

struct CliqueSearchResult {
    std::vector<std::size_t> clique;
    bool exhausted = false;
    std::uint64_t nodes = 0;
};

CliqueSearchResult clique_search(const std::vector<Bitset>& rows, std::size_t target, std::uint64_t budget);

}  // namespace detail

}  // namespace imh
