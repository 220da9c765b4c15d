// imh: command line front end for the induced matching reduction workbench.
//
// Exit codes: 0 success, 1 usage, 2 input, 3 budget exhausted,
// 4 verification failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "imh/approx_reductions.hpp"
#include "imh/clique_gap.hpp"
#include "imh/graph.hpp"
#include "imh/im_hardness.hpp"
#include "imh/io.hpp"
#include "imh/solvers.hpp"
#include "imh/verify.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kUsage = 1, kInput = 2, kBudget = 3, kVerifyFailed = 4 };

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CliConfig {
    std::string budget;
    std::uint64_t seed = 1;
    std::string out_dir;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const CliConfig& cfg, const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::filesystem::path target(path);
    if (!cfg.out_dir.empty() && target.is_relative())
        target = std::filesystem::path(cfg.out_dir) / target;
    std::ofstream out(target, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + target.string());
    out << text;
    if (!text.empty() && text.back() != '\n')
        out << '\n';
}

std::uint64_t parse_budget(const std::string& text, const CliConfig& cfg) {
    std::string value = text.empty() ? cfg.budget : text;
    if (value.empty()) {
        if (const char* env = std::getenv("IMH_BUDGET"))
            value = env;
    }
    if (value.empty())
        return imh::kDefaultNodeBudget;
    try {
        std::size_t used = 0;
        const double d = std::stod(value, &used);
        if (used != value.size() || d < 1)
            throw std::invalid_argument(value);
        return static_cast<std::uint64_t>(d);
    } catch (const std::exception&) {
        throw UsageError("budget must be a positive number of nodes, got '" + value + "'");
    }
}

/// Graph from DIMACS text or from a bundle.
imh::Graph load_graph(const std::string& text, std::optional<imh::AnyReduction>* reduction = nullptr) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        auto r = imh::load_reduction(text);
        imh::Graph g = imh::reduced_graph(*r);
        if (reduction)
            *reduction = std::move(r);
        return g;
    }
    imh::Graph g = imh::parse_graph(text);
    if (reduction)
        *reduction = imh::load_reduction(text);
    return g;
}

imh::AnyReduction require_reduction(const std::string& path) {
    auto r = imh::load_reduction(read_input(path));
    if (!r)
        throw InputError(path + " carries no reduction (expected a bundle, sidecar or reduced DIMACS graph)");
    return std::move(*r);
}

std::string solve_output(std::string_view problem, std::string_view status, std::size_t value, const imh::Witness& w,
                         std::uint64_t nodes, std::uint64_t budget) {
    json j = json::parse(imh::emit_witness(w));
    j["problem"] = problem;
    j["status"] = status;
    j["value"] = value;
    j["nodes_explored"] = nodes;
    j["budget"] = budget;
    return j.dump();
}

int run_solve(const CliConfig& cfg, const std::string& problem, const std::string& input, const std::string& output,
              std::optional<std::size_t> target, const std::string& budget_text) {
    const std::uint64_t budget = parse_budget(budget_text, cfg);
    std::optional<imh::AnyReduction> reduction;
    const imh::Graph g = load_graph(read_input(input), &reduction);
    const imh::WitnessKind kind = problem == "clique" ? imh::WitnessKind::Clique
                                  : problem == "mis"  ? imh::WitnessKind::Mis
                                                      : imh::WitnessKind::Mim;
    if (target) {
        imh::DecisionResult r;
        if (kind == imh::WitnessKind::Clique) {
            r = imh::has_clique(g, *target, budget);
        } else if (kind == imh::WitnessKind::Mis) {
            r = imh::has_independent_set(g, *target, budget);
        } else if (reduction && std::holds_alternative<imh::ImReductionOutput>(*reduction)) {
            const auto& out = std::get<imh::ImReductionOutput>(*reduction);
            r = imh::has_induced_matching_partitioned(g, *target, imh::region_partition(out), budget);
        } else {
            r = imh::has_induced_matching(g, *target, budget);
        }
        const std::size_t size = kind == imh::WitnessKind::Mim ? r.edges.size() : r.vertices.size();
        write_output(cfg, output,
                     solve_output(problem, imh::to_string(r.verdict), size, {kind, r.vertices, r.edges},
                                  r.nodes_explored, budget));
        std::cerr << "verdict: " << imh::to_string(r.verdict) << '\n';
        return r.verdict == imh::Verdict::Unknown ? kBudget : kOk;
    }
    imh::SolveResult r = kind == imh::WitnessKind::Clique ? imh::max_clique(g, budget)
                         : kind == imh::WitnessKind::Mis  ? imh::max_independent_set(g, budget)
                                                          : imh::max_induced_matching(g, budget);
    write_output(cfg, output,
                 solve_output(problem, imh::to_string(r.status), r.value, {kind, r.vertices, r.edges},
                              r.nodes_explored, budget));
    std::cerr << "status: " << imh::to_string(r.status) << ", value " << r.value << '\n';
    return r.status == imh::SolveStatus::Optimal ? kOk : kBudget;
}

int run_lift(const CliConfig& cfg, const std::string& reduction_path, const std::string& witness_path,
             const std::string& output) {
    const imh::AnyReduction r = require_reduction(reduction_path);
    const imh::Witness w = imh::parse_witness(read_input(witness_path));
    if (w.kind != imh::WitnessKind::Clique)
        throw InputError("lift expects a clique witness of the source graph");
    imh::Witness lifted;
    if (const auto* im = std::get_if<imh::ImReductionOutput>(&r)) {
        lifted = {imh::WitnessKind::Mim, {}, imh::lift_clique_to_matching(*im, w.vertices)};
    } else if (const auto* gap = std::get_if<imh::CliqueGapOutput>(&r)) {
        lifted = {imh::WitnessKind::Clique, imh::lift_clique(*gap, w.vertices), {}};
    } else {
        throw UsageError("lift supports the clique-gap and im-hard reductions");
    }
    write_output(cfg, output, imh::emit_witness(lifted));
    return kOk;
}

int run_extract(const CliConfig& cfg, const std::string& reduction_path, const std::string& witness_path,
                const std::string& output) {
    const imh::AnyReduction r = require_reduction(reduction_path);
    const imh::Witness w = imh::parse_witness(read_input(witness_path));
    imh::Witness back;
    std::visit(
        [&](const auto& out) {
            using T = std::decay_t<decltype(out)>;
            const bool wants_clique = std::is_same_v<T, imh::CliqueGapOutput>;
            if (wants_clique != (w.kind == imh::WitnessKind::Clique) ||
                (!wants_clique && w.kind != imh::WitnessKind::Mim))
                throw InputError(std::string("extract for ") + std::string(imh::to_string(imh::kind_of(r))) +
                                 " expects a " + (wants_clique ? "clique" : "mim") + " witness");
            if constexpr (std::is_same_v<T, imh::CliqueGapOutput>)
                back = {imh::WitnessKind::Clique, imh::project_clique(out, w.vertices), {}};
            else if constexpr (std::is_same_v<T, imh::ImReductionOutput>)
                back = {imh::WitnessKind::Clique, imh::extract_clique_from_matching(out, w.edges), {}};
            else if constexpr (std::is_same_v<T, imh::ImageReductionOutput>)
                back = {imh::WitnessKind::Mis, imh::matching_to_mis(out, w.edges), {}};
            else if constexpr (std::is_same_v<T, imh::HamClosureOutput>)
                back = {imh::WitnessKind::Mim, {}, imh::ham_closure_recover(out, w.edges)};
            else if constexpr (std::is_same_v<T, imh::BlowupOutput>)
                back = {imh::WitnessKind::Mis, imh::blowup_to_mis(out, w.edges), {}};
            else
                back = {imh::WitnessKind::Mim, {}, imh::hambip_recover(out, w.edges)};
        },
        r);
    write_output(cfg, output, imh::emit_witness(back));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reductions, exact solvers and verification campaigns for maximum induced matching"};
    app.require_subcommand(1);
    app.set_config("--config", "", "INI or TOML file supplying defaults");
    app.set_version_flag("--version", std::string(imh::kFormatVersion));

    CliConfig cfg;
    app.add_option("--default-budget", cfg.budget, "Solver node budget when --budget is absent (else $IMH_BUDGET)");
    app.add_option("--default-seed", cfg.seed, "Seed when --seed is absent");
    app.add_option("--out-dir", cfg.out_dir, "Directory for relative -o paths");

    std::string output;
    std::string input;

    // gen
    auto* gen = app.add_subcommand("gen", "Generate a graph in DIMACS format");
    gen->require_subcommand(1);
    std::size_t gen_n = 0;
    std::size_t gen_b = 0;
    double gen_p = 0.5;
    std::optional<std::uint64_t> gen_seed;
    auto* gen_complete = gen->add_subcommand("complete", "Complete graph K_n");
    gen_complete->add_option("n", gen_n, "Vertex count")->required();
    auto* gen_kb = gen->add_subcommand("complete-bipartite", "Complete bipartite K_{a,b} with side labels");
    gen_kb->add_option("a", gen_n, "First side")->required();
    gen_kb->add_option("b", gen_b, "Second side")->required();
    auto* gen_random = gen->add_subcommand("random", "G(n,p) from a seeded mt19937_64");
    gen_random->add_option("n", gen_n, "Vertex count")->required();
    gen_random->add_option("p", gen_p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
    gen_random->add_option("--seed", gen_seed, "Random seed");
    for (auto* sub : {gen_complete, gen_kb, gen_random})
        sub->add_option("-o,--output", output, "Output file (default stdout)");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "Apply a reduction to a DIMACS graph");
    reduce->require_subcommand(1);
    std::size_t reduce_k = 1;
    std::string sidecar_path;
    bool as_bundle = false;
    std::vector<std::pair<CLI::App*, imh::ReductionKind>> reductions;
    for (auto kind : {imh::ReductionKind::CliqueGap, imh::ReductionKind::ImHard, imh::ReductionKind::Image,
                      imh::ReductionKind::HamClosure, imh::ReductionKind::Blowup, imh::ReductionKind::HamBipClosure}) {
        auto* sub = reduce->add_subcommand(std::string(imh::to_string(kind)));
        if (kind == imh::ReductionKind::CliqueGap || kind == imh::ReductionKind::ImHard)
            sub->add_option("-k", reduce_k, "Clique parameter k")->check(CLI::PositiveNumber);
        sub->add_option("-i,--input", input, "Input DIMACS graph (default stdin)");
        sub->add_option("-o,--output", output, "Output file (default stdout)");
        sub->add_option("--sidecar", sidecar_path, "Write the provenance sidecar JSON here");
        sub->add_flag("--bundle", as_bundle, "Emit one JSON bundle instead of DIMACS");
        reductions.emplace_back(sub, kind);
    }

    // solve
    auto* solve = app.add_subcommand("solve", "Exact clique / independent set / induced matching");
    std::string problem;
    std::optional<std::size_t> target;
    std::string budget_text;
    solve->add_option("problem", problem, "clique, mis or mim")
        ->required()
        ->check(CLI::IsMember({"clique", "mis", "mim"}));
    solve->add_option("--target", target, "Decide whether a solution of this size exists");
    solve->add_option("--budget", budget_text, "Node budget, e.g. 1e8");
    solve->add_option("-i,--input", input, "Graph: DIMACS or bundle (default stdin)");
    solve->add_option("-o,--output", output, "Output file (default stdout)");

    // lift / extract
    std::string reduction_path;
    std::string witness_path;
    auto* lift = app.add_subcommand("lift", "Map a source clique to a witness of the reduced graph");
    auto* extract = app.add_subcommand("extract", "Map a reduced-graph witness back to the source graph");
    for (auto* sub : {lift, extract}) {
        sub->add_option("-r,--reduction", reduction_path, "Bundle, sidecar or reduced DIMACS graph")->required();
        sub->add_option("-w,--witness", witness_path, "Witness JSON (default stdin)");
        sub->add_option("-o,--output", output, "Output file (default stdout)");
    }

    // verify / replay
    auto* verify = app.add_subcommand("verify", "Run a verification campaign");
    std::string verify_kind;
    imh::CampaignSpec spec;
    std::optional<std::size_t> trials, n_min, n_max, k_min, k_max;
    std::optional<double> p_min, p_max;
    std::optional<std::uint64_t> verify_seed;
    std::size_t workers = 1;
    verify->add_option("reduction", verify_kind, "Reduction to verify")
        ->required()
        ->check(CLI::IsMember({"clique-gap", "im-hard", "image", "ham-closure", "blowup", "hambip-closure"}));
    verify->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "Seed of the first trial");
    verify->add_option("--n-min", n_min, "Smallest vertex count (side size for hambip-closure)");
    verify->add_option("--n-max", n_max, "Largest vertex count");
    verify->add_option("--p-min", p_min, "Smallest edge probability");
    verify->add_option("--p-max", p_max, "Largest edge probability");
    verify->add_option("--k-min", k_min, "Smallest k");
    verify->add_option("--k-max", k_max, "Largest k");
    verify->add_option("--budget", budget_text, "Node budget per solve");
    verify->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("-o,--output", output, "Report file (default stdout)");
    std::optional<std::size_t> bundle_trial;
    std::string bundle_path;
    verify->add_option("--emit-bundle", bundle_trial, "Also write the replay bundle of this trial index");
    verify->add_option("--bundle-output", bundle_path, "Where --emit-bundle writes (default stdout)");

    auto* replay = app.add_subcommand("replay", "Re-run one trial from a replay bundle");
    std::string replay_path;
    replay->add_option("bundle", replay_path, "Bundle file (default stdin)");
    replay->add_option("-o,--output", output, "Report file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (gen->parsed()) {
            imh::Graph g;
            if (gen_complete->parsed())
                g = imh::gen_complete(gen_n);
            else if (gen_kb->parsed())
                g = imh::gen_complete_bipartite(gen_n, gen_b);
            else
                g = imh::gen_random(gen_n, gen_p, gen_seed.value_or(cfg.seed));
            write_output(cfg, output, imh::emit_graph(g));
            return kOk;
        }
        if (reduce->parsed()) {
            for (const auto& [sub, kind] : reductions) {
                if (!sub->parsed())
                    continue;
                const imh::Graph g = load_graph(read_input(input));
                const imh::AnyReduction r = imh::run_reduction(kind, g, reduce_k);
                write_output(cfg, output, as_bundle ? imh::emit_bundle(r) : imh::emit_reduced_graph(r));
                if (!sidecar_path.empty())
                    write_output(cfg, sidecar_path, imh::emit_sidecar(r));
            }
            return kOk;
        }
        if (solve->parsed())
            return run_solve(cfg, problem, input, output, target, budget_text);
        if (lift->parsed())
            return run_lift(cfg, reduction_path, witness_path, output);
        if (extract->parsed())
            return run_extract(cfg, reduction_path, witness_path, output);
        if (verify->parsed()) {
            spec = imh::default_campaign(imh::reduction_kind_from(verify_kind));
            if (trials) spec.trials = *trials;
            if (n_min) spec.n_min = *n_min;
            if (n_max) spec.n_max = *n_max;
            if (p_min) spec.p_min = *p_min;
            if (p_max) spec.p_max = *p_max;
            if (k_min) spec.k_min = *k_min;
            if (k_max) spec.k_max = *k_max;
            spec.seed = verify_seed.value_or(cfg.seed);
            if (!budget_text.empty() || !cfg.budget.empty() || std::getenv("IMH_BUDGET"))
                spec.budget = parse_budget(budget_text, cfg);
            spec.workers = workers;
            try {
                spec.validate();
            } catch (const imh::PreconditionError& e) {
                throw UsageError(e.what());
            }
            const imh::VerificationReport report = imh::verify(spec);
            write_output(cfg, output, imh::report_json(report));
            if (bundle_trial) {
                if (*bundle_trial >= report.trials.size())
                    throw UsageError("--emit-bundle index out of range");
                write_output(cfg, bundle_path, imh::trial_bundle(report, *bundle_trial));
            }
            std::cerr << "passed " << report.passed << ", failed " << report.failed << ", unknown "
                      << report.unknown << '\n';
            return report.ok() ? kOk : kVerifyFailed;
        }
        if (replay->parsed()) {
            const imh::VerificationReport report = imh::replay(read_input(replay_path));
            write_output(cfg, output, imh::report_json(report));
            return report.ok() ? kOk : kVerifyFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const imh::ReductionSoundnessError& e) {
        std::cerr << "soundness check failed: " << e.what() << '\n';
        return kVerifyFailed;
    } catch (const imh::VersionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const imh::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const imh::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kUsage;
}
