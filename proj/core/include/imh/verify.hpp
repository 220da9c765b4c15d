#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "imh/graph.hpp"
#include "imh/io.hpp"
#include "imh/solvers.hpp"

namespace imh {

/// Parameters of a verification campaign. Trial i uses seed `seed + i`;
/// that seed alone fixes the instance (vertex count, edge probability and
/// k are drawn from the ranges with it).
struct CampaignSpec {
    ReductionKind reduction = ReductionKind::Image;
    std::size_t n_min = 2;
    std::size_t n_max = 8;
    double p_min = 0.2;
    double p_max = 0.8;
    std::size_t k_min = 1;
    std::size_t k_max = 1;
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    std::uint64_t budget = kDefaultNodeBudget;
    std::size_t workers = 1;

    /// Throws PreconditionError on empty ranges or zero trials.
    void validate() const;
};

/// Sensible ranges per reduction: im-hard uses 7-vertex graphs and k = 1,
/// blowup uses n in 2..3, hambip-closure reads n as the side size p.
CampaignSpec default_campaign(ReductionKind kind);

enum class TrialStatus { Pass, Fail, Unknown };

std::string_view to_string(TrialStatus s);

struct TrialRecord {
    std::uint64_t seed = 0;
    std::size_t k = 0;
    std::string instance;  // source graph, DIMACS
    std::size_t n = 0;
    std::size_t m = 0;
    /// Named relation values, e.g. {"opt_g", 3}, {"opt_h", 3}.
    std::vector<std::pair<std::string, std::int64_t>> values;
    std::string relation;
    TrialStatus status = TrialStatus::Pass;
    std::string failure;  // "<module>: <message>" when status is Fail
    std::string witness;  // witness JSON of the reduced-graph solution
    std::string census;   // census summary JSON, im-hard and blowup only
    double runtime_ms = 0;
};

struct VerificationReport {
    CampaignSpec spec;
    std::vector<TrialRecord> trials;  // ordered by seed
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t unknown = 0;
    std::optional<std::size_t> first_counterexample;  // index into trials

    bool ok() const { return failed == 0; }
};

/// Runs every trial of the campaign on `spec.workers` threads. Solver
/// budget exhaustion yields Unknown trials, never failures; an exception
/// from a witness mapping (for example a soundness error on extraction)
/// fails its trial.
VerificationReport verify(const CampaignSpec& spec);

/// Re-runs one trial on an explicit instance.
TrialRecord run_trial(ReductionKind kind, const Graph& source, std::size_t k, std::uint64_t seed,
                      std::uint64_t budget);

/// Self-contained replay input for trial i of a report.
std::string trial_bundle(const VerificationReport& report, std::size_t i);

/// Re-executes the trial in a bundle. Throws VersionError on a format
/// mismatch.
VerificationReport replay(std::string_view bundle);

std::string report_json(const VerificationReport& report);

/// Instance generator of a campaign: the graph for one trial seed.
struct TrialInstance {
    Graph graph;
    std::size_t k = 0;
};

TrialInstance generate_instance(const CampaignSpec& spec, std::uint64_t seed);

/// Triangle-free graph on n vertices: a seeded random graph from which,
/// visiting edges in order, every edge closing a triangle with kept edges is
/// dropped.
Graph gen_triangle_free(std::size_t n, double edge_probability, std::uint64_t seed);

/// Random bipartite graph with sides 0..p-1 (S1) and p..2p-1 (S2).
Graph gen_random_bipartite(std::size_t p, double edge_probability, std::uint64_t seed);

}  // namespace imh
