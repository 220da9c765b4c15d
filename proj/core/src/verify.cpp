#include "imh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "imh/approx_reductions.hpp"
#include "imh/clique_gap.hpp"
#include "imh/im_hardness.hpp"
#include "json.hpp"

namespace imh {

using nlohmann::json;

namespace {

/// Thrown inside a trial to fail it with a module-tagged message.
struct TrialFailure {
    std::string message;
};

/// Thrown inside a trial when a solver runs out of budget.
struct TrialUnknown {};

void expect(bool condition, std::string_view module, const std::string& message) {
    if (!condition)
        throw TrialFailure{std::string(module) + ": " + message};
}

SolveResult exact(SolveResult r) {
    if (r.status != SolveStatus::Optimal)
        throw TrialUnknown{};
    return r;
}

std::string str(std::size_t v) { return std::to_string(v); }

class Trial {
public:
    Trial(TrialRecord& rec, std::uint64_t budget) : rec_(rec), budget_(budget) {}

    void value(std::string name, std::size_t v) { rec_.values.emplace_back(std::move(name), static_cast<std::int64_t>(v)); }

    void clique_gap(const Graph& g, std::size_t k) {
        rec_.relation = "omega(H) = 2*omega(G) + 1";
        const auto out = clique_gap_reduce(g, k);
        const auto wg = exact(max_clique(g, budget_));
        const auto wh = exact(max_clique(out.graph, budget_));
        value("omega_g", wg.value);
        value("omega_h", wh.value);
        rec_.witness = emit_witness({WitnessKind::Clique, wh.vertices, {}});
        expect(wh.value == 2 * wg.value + 1, "clique_gap",
               "omega(H) = " + str(wh.value) + ", expected " + str(2 * wg.value + 1));
        if (wg.value >= k) {
            const VertexSet c(wg.vertices.begin(), wg.vertices.begin() + static_cast<std::ptrdiff_t>(k));
            const auto lifted = lift_clique(out, c);
            expect(lifted.size() == 2 * k + 1 && is_clique(out.graph, lifted), "clique_gap", "lifted set is not a clique");
            const auto projected = project_clique(out, wh.vertices);
            expect(is_clique(g, projected) && projected.size() == wg.value, "clique_gap",
                   "projection of a maximum clique has size " + str(projected.size()));
        }
    }

    void im_hard(const Graph& g, std::size_t k) {
        rec_.relation = "omega(G) >= 2k+1 iff MIM(H) >= 6k(2k+1)";
        const auto out = build_h(g, k);
        expect(out.graph.num_vertices() == im_hard_vertex_count(k, g.num_vertices(), g.num_edges()), "im_hardness",
               "vertex count differs from the closed form");
        expect(validate_cycle(out.graph, out.ham_cycle), "im_hardness", "Hamiltonian cycle does not validate");
        const auto wg = exact(max_clique(g, budget_));
        const bool clique_exists = wg.value >= out.l;
        value("omega_g", wg.value);
        value("target", out.target);

        json census = json::object();
        if (clique_exists) {
            const VertexSet c(wg.vertices.begin(), wg.vertices.begin() + static_cast<std::ptrdiff_t>(out.l));
            const auto lifted = lift_clique_to_matching(out, c);
            expect(lifted.size() == out.target && is_induced_matching(out.graph, lifted), "im_hardness",
                   "lifted matching is not an induced matching of the target size");
            const auto mc = matching_census(out, lifted);
            census["lifted_boundary_edges"] = mc.boundary_edges;
            expect(mc.boundary_edges == 0, "im_hardness", "lifted matching has boundary edges");
        }

        const auto r = has_induced_matching_partitioned(out.graph, out.target, region_partition(out), budget_);
        value("nodes", r.nodes_explored);
        if (r.verdict == Verdict::Unknown)
            throw TrialUnknown{};
        const bool yes = r.verdict == Verdict::Yes;
        value("verdict_yes", yes ? 1 : 0);
        rec_.witness = emit_witness({WitnessKind::Mim, {}, r.edges});
        if (yes) {
            const auto mc = matching_census(out, r.edges);
            std::size_t max_gadget = 0;
            std::size_t max_group = 0;
            for (const auto& gc : mc.gadgets)
                max_gadget = std::max(max_gadget, gc.inner_edges);
            for (const auto& gc : mc.groups)
                max_group = std::max(max_group, gc.inner_edges + gc.attached_boundary_edges);
            census["inner_edges"] = mc.inner_edges;
            census["boundary_edges"] = mc.boundary_edges;
            census["max_per_gadget"] = max_gadget;
            census["max_per_group"] = max_group;
            expect(max_gadget <= 3 && max_group <= 3 * k, "im_hardness", "census exceeds the per-region bounds");
        }
        rec_.census = census.dump();
        expect(yes == clique_exists, "im_hardness",
               std::string("decision ") + (yes ? "yes" : "no") + " but omega(G) = " + str(wg.value));
        if (yes) {
            VertexSet c;
            try {
                c = extract_clique_from_matching(out, r.edges);
            } catch (const ReductionSoundnessError& e) {
                throw TrialFailure{std::string("im_hardness: ") + e.what()};
            }
            expect(c.size() == out.l && is_clique(g, c), "im_hardness", "extracted set is not a clique");
        }
    }

    void image(const Graph& g) {
        rec_.relation = "MIS(G) = MIM(H)";
        const auto out = image_reduce(g);
        const auto opt_g = exact(max_independent_set(g, budget_));
        const auto opt_h = exact(max_induced_matching(out.graph, budget_));
        value("opt_g", opt_g.value);
        value("opt_h", opt_h.value);
        rec_.witness = emit_witness({WitnessKind::Mim, {}, opt_h.edges});
        expect(opt_g.value == opt_h.value, "approx_reductions",
               "MIS(G) = " + str(opt_g.value) + " but MIM(H) = " + str(opt_h.value));
        const auto mis = matching_to_mis(out, opt_h.edges);
        expect(mis.size() == opt_h.edges.size() && is_independent_set(g, mis), "approx_reductions",
               "matching_to_mis did not give an independent set of the same size");
    }

    void ham_closure(const Graph& g) {
        rec_.relation = "MIM(G) = MIM(H)";
        const auto out = ham_closure_reduce(g);
        expect(out.graph.num_vertices() == 2 * g.num_vertices() && validate_cycle(out.graph, out.ham_cycle),
               "approx_reductions", "closure size or cycle invalid");
        const auto opt_g = exact(max_induced_matching(g, budget_));
        const auto opt_h = exact(max_induced_matching(out.graph, budget_));
        value("opt_g", opt_g.value);
        value("opt_h", opt_h.value);
        rec_.witness = emit_witness({WitnessKind::Mim, {}, opt_h.edges});
        expect(opt_g.value == opt_h.value, "approx_reductions",
               "MIM(G) = " + str(opt_g.value) + " but MIM(H) = " + str(opt_h.value));
        const auto back = ham_closure_recover(out, opt_h.edges);
        expect(back.size() == opt_h.value && is_induced_matching(g, back), "approx_reductions",
               "recovered matching invalid or smaller");
    }

    void blowup(const Graph& g) {
        rec_.relation = "n^3*MIS(G) <= MIM(H) <= n^3*MIS(G) + n(n-1)";
        const auto out = blowup_reduce(g);
        const std::size_t n = g.num_vertices();
        const std::size_t cube = n * n * n;
        expect(out.graph.num_vertices() == 2 * n * cube, "approx_reductions", "blow-up size is not 2n^4");
        const auto opt_g = exact(max_independent_set(g, budget_));
        const auto opt_h = exact(max_induced_matching(out.graph, budget_));
        value("opt_g", opt_g.value);
        value("opt_h", opt_h.value);
        rec_.witness = emit_witness({WitnessKind::Mim, {}, opt_h.edges});
        expect(cube * opt_g.value <= opt_h.value && opt_h.value <= cube * opt_g.value + n * (n - 1),
               "approx_reductions", "MIM(H) = " + str(opt_h.value) + " outside the bounds for MIS(G) = " +
                                        str(opt_g.value));
        const auto census = blowup_census(out, opt_h.edges);
        rec_.census = json{{"heterogeneous", census.heterogeneous}, {"max_per_block", census.max_per_block}}.dump();
        expect(census.max_per_block <= 1, "approx_reductions", "two heterogeneous edges in one block");
        for (std::size_t count : census.homogeneous)
            expect(count == 0 || count == cube, "approx_reductions", "partial homogeneous block in a maximum matching");
        const auto mis = blowup_to_mis(out, opt_h.edges);
        expect(is_independent_set(g, mis), "approx_reductions", "blowup_to_mis is not independent");
        expect(mis.size() * cube + n * (n - 1) >= opt_h.value, "approx_reductions",
               "recovered independent set too small");
    }

    void hambip_closure(const Graph& g) {
        rec_.relation = "MIM(G) = MIM(H)";
        const auto out = hambip_closure_reduce(g);
        expect(out.graph.num_vertices() == 4 * out.p + 2 && validate_cycle(out.graph, out.ham_cycle),
               "approx_reductions", "closure size or cycle invalid");
        const auto s1 = std::count(out.graph.sides()->begin(), out.graph.sides()->end(), Side::S1);
        expect(static_cast<std::size_t>(s1) * 2 == out.graph.num_vertices(), "approx_reductions",
               "closure is not equally sided");
        const auto opt_g = exact(max_induced_matching(g, budget_));
        const auto opt_h = exact(max_induced_matching(out.graph, budget_));
        value("opt_g", opt_g.value);
        value("opt_h", opt_h.value);
        rec_.witness = emit_witness({WitnessKind::Mim, {}, opt_h.edges});
        expect(opt_g.value == opt_h.value, "approx_reductions",
               "MIM(G) = " + str(opt_g.value) + " but MIM(H) = " + str(opt_h.value));
        const auto back = hambip_recover(out, opt_h.edges);
        expect(back.size() == opt_h.value && is_induced_matching(g, back), "approx_reductions",
               "recovered matching invalid or smaller");
    }

private:
    TrialRecord& rec_;
    std::uint64_t budget_;
};

json spec_json(const CampaignSpec& s) {
    return {{"reduction", to_string(s.reduction)},
            {"n_min", s.n_min},
            {"n_max", s.n_max},
            {"p_min", s.p_min},
            {"p_max", s.p_max},
            {"k_min", s.k_min},
            {"k_max", s.k_max},
            {"seed", s.seed},
            {"trials", s.trials},
            {"budget", s.budget},
            {"workers", s.workers}};
}

json trial_json(const TrialRecord& t) {
    json values = json::object();
    for (const auto& [name, v] : t.values)
        values[name] = v;
    json j = {{"seed", t.seed},
              {"k", t.k},
              {"n", t.n},
              {"m", t.m},
              {"relation", t.relation},
              {"values", values},
              {"status", to_string(t.status)},
              {"runtime_ms", t.runtime_ms}};
    if (!t.witness.empty())
        j["witness"] = json::parse(t.witness);
    if (!t.census.empty())
        j["census"] = json::parse(t.census);
    if (t.status == TrialStatus::Fail) {
        j["failure"] = t.failure;
        j["instance"] = t.instance;
    }
    return j;
}

Graph graph_with_edges(std::size_t n, double p, std::mt19937_64& rng, std::size_t min_edges,
                       Graph (*make)(std::size_t, double, std::uint64_t)) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Graph g = make(n, p, rng());
        if (g.num_edges() >= min_edges)
            return g;
    }
    throw PreconditionError("generator could not reach " + std::to_string(min_edges) + " edges");
}

}  // namespace

void CampaignSpec::validate() const {
    if (n_min > n_max || p_min > p_max || k_min > k_max)
        throw PreconditionError("campaign ranges must be non-empty");
    if (p_min < 0.0 || p_max > 1.0)
        throw PreconditionError("edge probabilities must lie in [0,1]");
    if (trials == 0)
        throw PreconditionError("campaign needs at least one trial");
    if (workers == 0)
        throw PreconditionError("campaign needs at least one worker");
}

CampaignSpec default_campaign(ReductionKind kind) {
    CampaignSpec s;
    s.reduction = kind;
    switch (kind) {
        case ReductionKind::CliqueGap:
            s.n_min = 1;
            s.n_max = 9;
            s.k_max = 3;
            break;
        case ReductionKind::ImHard:
            s.n_min = s.n_max = 7;
            s.p_min = 0.25;
            s.p_max = 0.5;
            s.trials = 20;
            s.budget = 1'000'000'000;
            break;
        case ReductionKind::Image:
            s.n_min = 1;
            s.n_max = 8;
            break;
        case ReductionKind::HamClosure: break;
        case ReductionKind::Blowup:
            s.n_min = 2;
            s.n_max = 2;
            s.trials = 20;
            break;
        case ReductionKind::HamBipClosure:
            s.n_min = 1;
            s.n_max = 4;
            break;
    }
    return s;
}

std::string_view to_string(TrialStatus s) {
    switch (s) {
        case TrialStatus::Pass: return "pass";
        case TrialStatus::Fail: return "fail";
        case TrialStatus::Unknown: return "unknown";
    }
    return "unknown";
}

Graph gen_triangle_free(std::size_t n, double edge_probability, std::uint64_t seed) {
    const Graph base = gen_random(n, edge_probability, seed);
    GraphBuilder b(n);
    std::vector<std::vector<bool>> kept(n, std::vector<bool>(n, false));
    for (const Edge& e : base.edges()) {
        bool closes = false;
        for (std::size_t w = 0; w < n && !closes; ++w)
            closes = kept[e.u][w] && kept[e.v][w];
        if (closes)
            continue;
        kept[e.u][e.v] = kept[e.v][e.u] = true;
        b.add_edge(e.u, e.v);
    }
    return b.build();
}

Graph gen_random_bipartite(std::size_t p, double edge_probability, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    GraphBuilder b(2 * p);
    for (VertexId i = 0; i < p; ++i)
        for (VertexId j = 0; j < p; ++j)
            if (coin(rng) < edge_probability)
                b.add_edge(i, static_cast<VertexId>(p + j));
    Sides sides(2 * p, Side::S2);
    std::fill(sides.begin(), sides.begin() + static_cast<std::ptrdiff_t>(p), Side::S1);
    return b.build(std::move(sides));
}

TrialInstance generate_instance(const CampaignSpec& spec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(spec.n_min, spec.n_max)(rng);
    const double p = std::uniform_real_distribution<double>(spec.p_min, spec.p_max)(rng);
    TrialInstance inst;
    inst.k = std::uniform_int_distribution<std::size_t>(spec.k_min, spec.k_max)(rng);
    switch (spec.reduction) {
        case ReductionKind::CliqueGap:
        case ReductionKind::Image:
        case ReductionKind::Blowup:
            inst.graph = gen_random(n, p, rng());
            break;
        case ReductionKind::HamClosure:
            inst.graph = graph_with_edges(n, p, rng, 1, gen_random);
            break;
        case ReductionKind::HamBipClosure:
            inst.graph = graph_with_edges(n, p, rng, 1, gen_random_bipartite);
            break;
        case ReductionKind::ImHard:
            // Odd seeds give triangle-free no-instances, even seeds plain
            // random graphs.
            inst.graph = graph_with_edges(n, p, rng, 3, seed % 2 ? gen_triangle_free : gen_random);
            break;
    }
    return inst;
}

TrialRecord run_trial(ReductionKind kind, const Graph& source, std::size_t k, std::uint64_t seed,
                      std::uint64_t budget) {
    TrialRecord rec;
    rec.seed = seed;
    rec.k = k;
    rec.instance = emit_graph(source);
    rec.n = source.num_vertices();
    rec.m = source.num_edges();
    const auto start = std::chrono::steady_clock::now();
    Trial trial(rec, budget);
    try {
        switch (kind) {
            case ReductionKind::CliqueGap: trial.clique_gap(source, k); break;
            case ReductionKind::ImHard: trial.im_hard(source, k); break;
            case ReductionKind::Image: trial.image(source); break;
            case ReductionKind::HamClosure: trial.ham_closure(source); break;
            case ReductionKind::Blowup: trial.blowup(source); break;
            case ReductionKind::HamBipClosure: trial.hambip_closure(source); break;
        }
        rec.status = TrialStatus::Pass;
    } catch (const TrialFailure& f) {
        rec.status = TrialStatus::Fail;
        rec.failure = f.message;
    } catch (const TrialUnknown&) {
        rec.status = TrialStatus::Unknown;
    } catch (const ReductionSoundnessError& e) {
        rec.status = TrialStatus::Fail;
        rec.failure = std::string("im_hardness: ") + e.what();
    } catch (const std::exception& e) {
        rec.status = TrialStatus::Fail;
        rec.failure = std::string(to_string(kind)) + ": " + e.what();
    }
    rec.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

VerificationReport verify(const CampaignSpec& spec) {
    spec.validate();
    VerificationReport report;
    report.spec = spec;
    report.trials.resize(spec.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < spec.trials; i = next++) {
            const std::uint64_t seed = spec.seed + i;
            const TrialInstance inst = generate_instance(spec, seed);
            report.trials[i] = run_trial(spec.reduction, inst.graph, inst.k, seed, spec.budget);
        }
    };
    const std::size_t workers = std::min(spec.workers, spec.trials);
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < workers; ++w)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        switch (report.trials[i].status) {
            case TrialStatus::Pass: ++report.passed; break;
            case TrialStatus::Unknown: ++report.unknown; break;
            case TrialStatus::Fail:
                ++report.failed;
                if (!report.first_counterexample)
                    report.first_counterexample = i;
                break;
        }
    }
    return report;
}

std::string trial_bundle(const VerificationReport& report, std::size_t i) {
    const TrialRecord& t = report.trials.at(i);
    json j = {{"format_version", kFormatVersion},
              {"reduction", to_string(report.spec.reduction)},
              {"seed", t.seed},
              {"k", t.k},
              {"budget", report.spec.budget},
              {"instance", t.instance}};
    return j.dump();
}

VerificationReport replay(std::string_view bundle) {
    json j;
    try {
        j = json::parse(bundle);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid bundle JSON: ") + e.what());
    }
    if (!j.contains("format_version") || !j["format_version"].is_string())
        throw VersionError("bundle carries no format version");
    check_version(j["format_version"].get<std::string>());
    VerificationReport report;
    try {
        report.spec.reduction = reduction_kind_from(j.at("reduction").get<std::string>());
        report.spec.seed = j.at("seed").get<std::uint64_t>();
        report.spec.budget = j.at("budget").get<std::uint64_t>();
        report.spec.trials = 1;
        const std::size_t k = j.at("k").get<std::size_t>();
        const Graph g = parse_graph(j.at("instance").get<std::string>());
        report.spec.n_min = report.spec.n_max = g.num_vertices();
        report.spec.k_min = report.spec.k_max = k;
        report.trials.push_back(run_trial(report.spec.reduction, g, k, report.spec.seed, report.spec.budget));
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("malformed bundle: ") + e.what());
    }
    const TrialRecord& t = report.trials.front();
    report.passed = t.status == TrialStatus::Pass;
    report.unknown = t.status == TrialStatus::Unknown;
    report.failed = t.status == TrialStatus::Fail;
    if (report.failed)
        report.first_counterexample = 0;
    return report;
}

std::string report_json(const VerificationReport& report) {
    json trials = json::array();
    for (const auto& t : report.trials)
        trials.push_back(trial_json(t));
    json summary = {{"trials", report.trials.size()},
                    {"passed", report.passed},
                    {"failed", report.failed},
                    {"unknown", report.unknown}};
    if (report.first_counterexample) {
        const std::size_t i = *report.first_counterexample;
        summary["first_counterexample"] = {{"trial", i}, {"bundle", json::parse(trial_bundle(report, i))}};
    }
    return json{{"format_version", kFormatVersion},
                {"campaign", spec_json(report.spec)},
                {"trials", trials},
                {"summary", summary}}
        .dump(2);
}

}  // namespace imh
