#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "imh/approx_reductions.hpp"
#include "imh/clique_gap.hpp"
#include "imh/graph.hpp"
#include "imh/im_hardness.hpp"

namespace imh {

/// Tag written into every JSON artifact and checked on load.
inline constexpr std::string_view kFormatVersion = "imh-format-1";

/// Malformed input. `line()` is 1-based, or 0 when the error has no line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Artifact written by a different format version.
class VersionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// DIMACS-like text: `p edge <n> <m>`, then `e <u> <v>` per edge and optional
// `s <u> <1|2>` side labels, all 1-indexed; `c` lines are comments. Side
// labels must be given for every vertex or for none.

Graph parse_graph(std::string_view text);

/// Canonical form: header, edges in lexicographic order, then side labels.
std::string emit_graph(const Graph& g);

enum class WitnessKind { Clique, Mis, Mim, Cycle };

std::string_view to_string(WitnessKind k);
WitnessKind witness_kind_from(std::string_view s);

/// Vertex items for clique, mis and cycle; edge items for mim.
struct Witness {
    WitnessKind kind = WitnessKind::Clique;
    VertexSet vertices;
    EdgeSet edges;
};

/// `{"format_version":..,"kind":..,"items":[..]}` on one line.
std::string emit_witness(const Witness& w);
Witness parse_witness(std::string_view text);

enum class ReductionKind { CliqueGap, ImHard, Image, HamClosure, Blowup, HamBipClosure };

std::string_view to_string(ReductionKind k);
ReductionKind reduction_kind_from(std::string_view s);

using AnyReduction = std::variant<CliqueGapOutput, ImReductionOutput, ImageReductionOutput, HamClosureOutput,
                                  BlowupOutput, HamBipClosureOutput>;

/// `k` is used by clique-gap and im-hard only.
AnyReduction run_reduction(ReductionKind kind, const Graph& source, std::size_t k);

ReductionKind kind_of(const AnyReduction& r);
const Graph& reduced_graph(const AnyReduction& r);
const Graph& source_graph(const AnyReduction& r);

/// JSON describing the reduction: kind, parameters, target (where one
/// exists), source graph, Hamiltonian cycle (where one exists) and
/// per-vertex provenance.
std::string emit_sidecar(const AnyReduction& r);

/// Rebuilds the reduction from the sidecar's source graph and parameters.
/// Throws VersionError on a format mismatch and ParseError when `reduced`
/// is given and differs from the rebuilt graph.
AnyReduction load_sidecar(std::string_view json, const Graph* reduced = nullptr);

/// Single JSON document holding the reduced graph (DIMACS text) and the
/// sidecar.
std::string emit_bundle(const AnyReduction& r);
AnyReduction load_bundle(std::string_view json);

/// Reduced graph in DIMACS with a leading `c imh-reduction <json>` comment
/// naming the reduction, k, target and source graph, so a piped graph can
/// be tied back to its reduction.
std::string emit_reduced_graph(const AnyReduction& r);

/// Reads any reduction carrier: a bundle, a sidecar, or DIMACS text with an
/// imh-reduction comment. Returns nothing for DIMACS without one.
std::optional<AnyReduction> load_reduction(std::string_view text);

/// Throws VersionError unless `found` equals kFormatVersion.
void check_version(std::string_view found);

}  // namespace imh
