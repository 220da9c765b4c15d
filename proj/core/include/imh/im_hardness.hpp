#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "imh/graph.hpp"

namespace imh {

/// Integers of a clique slot are 1-based: 1..l with l = 2k+1.
using IntPair = std::pair<std::uint32_t, std::uint32_t>;

enum class UnitKind : std::uint8_t { Gadget, Connector };
enum class GadgetRole : std::uint8_t { ForK1, ForK2, Auxiliary };

/// Which bipartite unit a vertex of H belongs to.
///
/// Gadget units: `owner` is the gadget index (lexicographic on the pair),
/// `pair` its integer pair and `role` which integer the unit selects for.
/// Connector units: `owner` is the connector index (position along the
/// gadget cycle), `integer` the shared integer t and `unit_index` 0..2.
struct UnitRole {
    UnitKind kind = UnitKind::Gadget;
    std::uint32_t owner = 0;
    IntPair pair{0, 0};
    GadgetRole role = GadgetRole::ForK1;
    std::uint32_t integer = 0;
    std::uint32_t unit_index = 0;

    friend bool operator==(const UnitRole&, const UnitRole&) = default;
};

/// Per-vertex provenance. `represents` is an index into g.edges() for gadget
/// units and a vertex id of g for connector units.
struct ImVertexInfo {
    UnitRole unit;
    std::uint32_t unit_id = 0;  // global unit number, see ImReductionOutput::units
    Side side = Side::S1;
    std::uint32_t represents = 0;
};

/// Contiguous id block of one bipartite unit: the S1 block starts at
/// `first`, the S2 block at `first + width`.
struct UnitBlock {
    UnitRole role;
    VertexId first = 0;
    std::uint32_t width = 0;  // |E(G)| for gadget units, |V(G)| for connector units

    VertexId vertex(Side side, std::uint32_t represents) const {
        return first + (side == Side::S1 ? 0 : width) + represents;
    }
};

struct ConnectorInfo {
    std::uint32_t gadget_a = 0;  // position i on the gadget cycle
    std::uint32_t gadget_b = 0;  // position i+1 (cyclically)
    std::uint32_t integer = 0;   // the shared integer t
};

struct ImReductionOutput {
    Graph source;
    Graph graph;  // H, side-labelled
    std::vector<ImVertexInfo> provenance;
    std::vector<UnitBlock> units;
    std::vector<IntPair> gadgets;                // gadget index -> integer pair
    std::vector<std::array<std::uint32_t, 3>> gadget_units;     // gadget index -> unit ids (k1, k2, aux)
    std::vector<std::array<std::uint32_t, 3>> connector_units;  // connector index -> unit ids
    std::vector<std::uint32_t> gadget_cycle;     // gadget indices in cycle order
    std::vector<std::uint32_t> shared_integers;  // b(i): integer shared by cycle positions i and i+1
    std::vector<ConnectorInfo> connectors;       // in cycle order
    std::vector<VertexId> ham_cycle;
    std::size_t k = 0;
    std::size_t l = 0;
    std::size_t target = 0;  // 6k(2k+1)

    /// Gadget unit selecting for integer t in the gadget at `gadget`.
    std::uint32_t unit_for(std::uint32_t gadget, std::uint32_t t) const;
};

/// Raised when a matching of the full target size violates one of the
/// structural facts the extraction relies on.
class ReductionSoundnessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t im_hard_target(std::size_t k);
std::size_t im_hard_vertex_count(std::size_t k, std::size_t n, std::size_t m);

/// Gadget pairs in Hamiltonian-cycle order of the line graph of K_l,
/// 1-based. Each consecutive pair (cyclically) shares exactly one integer.
std::vector<IntPair> build_gadget_cycle(std::size_t l);

/// Integer shared by positions i and i+1 of a gadget cycle (cyclically).
std::vector<std::uint32_t> shared_integers(const std::vector<IntPair>& cycle);

/// Builds H from (g, k). Requires |V(g)| >= 7, |E(g)| >= 3 and k >= 1.
ImReductionOutput build_h(const Graph& g, std::size_t k);

/// Three within-unit edges per gadget and per connector, all representing
/// the clique's edge or vertex for that slot. The clique must have 2k+1
/// vertices; they are assigned to integers 1..l in ascending id order.
EdgeSet lift_clique_to_matching(const ImReductionOutput& out, std::span<const VertexId> clique);

/// Reads a (2k+1)-clique of g back out of an induced matching of H of the
/// target size, checking the structural facts as it goes.
VertexSet extract_clique_from_matching(const ImReductionOutput& out, std::span<const Edge> matching);

enum class GadgetStatus { Good, BadInOneSide, CompletelyBad };

struct GadgetCensus {
    std::size_t inner_edges = 0;
    bool bad_in_k1 = false;
    bool bad_in_k2 = false;
    GadgetStatus status = GadgetStatus::Good;
};

struct ConnectorGroupCensus {
    std::uint32_t integer = 0;
    std::size_t inner_edges = 0;
    std::size_t attached_boundary_edges = 0;
    std::size_t full_units = 0;
    std::size_t empty_units = 0;
    std::size_t occupied_units = 0;
    std::size_t dangling_edges = 0;
};

struct MatchingCensus {
    std::vector<GadgetCensus> gadgets;            // by gadget index
    std::vector<ConnectorGroupCensus> groups;     // by integer t-1
    std::size_t inner_edges = 0;
    std::size_t boundary_edges = 0;
    std::size_t dangling_edges = 0;
};

/// Classifies matching edges as inner or boundary and tallies the per-region
/// counts used by the counting argument. m must be an induced matching of H.
MatchingCensus matching_census(const ImReductionOutput& out, std::span<const Edge> matching);

std::string to_string(GadgetStatus s);

/// Partition of H's edges (indices into out.graph.edges()) by region: one
/// part per gadget holding its inner edges, then one part per integer t
/// holding every edge with an endpoint in connector group t.
std::vector<std::vector<std::size_t>> region_partition(const ImReductionOutput& out);

}  // namespace imh
