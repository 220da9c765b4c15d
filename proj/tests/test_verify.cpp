#include <gtest/gtest.h>

#include "json.hpp"

#include "imh/verify.hpp"
#include "oracles.hpp"

using namespace imh;

namespace {

CampaignSpec small(ReductionKind kind, std::size_t trials) {
    CampaignSpec spec = default_campaign(kind);
    spec.trials = trials;
    return spec;
}

}  // namespace

TEST(Campaign, Validation) {
    CampaignSpec spec;
    spec.trials = 0;
    EXPECT_THROW(spec.validate(), PreconditionError);
    spec.trials = 1;
    spec.n_min = 5;
    spec.n_max = 4;
    EXPECT_THROW(spec.validate(), PreconditionError);
}

TEST(Campaign, SmallCampaignsPass) {
    for (ReductionKind kind : {ReductionKind::CliqueGap, ReductionKind::Image, ReductionKind::HamClosure,
                               ReductionKind::Blowup, ReductionKind::HamBipClosure}) {
        const auto report = verify(small(kind, 20));
        EXPECT_TRUE(report.ok()) << to_string(kind);
        EXPECT_EQ(report.trials.size(), 20u);
        EXPECT_EQ(report.passed + report.failed + report.unknown, 20u);
        EXPECT_FALSE(report.first_counterexample);
    }
}

TEST(Campaign, ImHardTrials) {
    const auto report = verify(small(ReductionKind::ImHard, 3));
    EXPECT_TRUE(report.ok());
    EXPECT_EQ(report.unknown, 0u);
    for (const auto& t : report.trials) {
        EXPECT_EQ(t.n, 7u);
        EXPECT_FALSE(t.census.empty());
    }
}

TEST(Campaign, InstancesAreSeedDetermined) {
    const CampaignSpec spec = default_campaign(ReductionKind::CliqueGap);
    for (std::uint64_t s = 1; s <= 20; ++s) {
        const auto a = generate_instance(spec, s);
        const auto b = generate_instance(spec, s);
        EXPECT_EQ(a.graph, b.graph);
        EXPECT_EQ(a.k, b.k);
        EXPECT_GE(a.graph.num_vertices(), spec.n_min);
        EXPECT_LE(a.graph.num_vertices(), spec.n_max);
    }
}

TEST(Campaign, WorkerCountDoesNotChangeResults) {
    CampaignSpec spec = small(ReductionKind::Image, 30);
    const auto one = verify(spec);
    spec.workers = 3;
    const auto three = verify(spec);
    ASSERT_EQ(one.trials.size(), three.trials.size());
    for (std::size_t i = 0; i < one.trials.size(); ++i) {
        EXPECT_EQ(one.trials[i].seed, three.trials[i].seed);
        EXPECT_EQ(one.trials[i].witness, three.trials[i].witness);
        EXPECT_EQ(one.trials[i].values, three.trials[i].values);
    }
}

TEST(Replay, ReproducesTrial) {
    const auto report = verify(small(ReductionKind::HamBipClosure, 5));
    for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto again = replay(trial_bundle(report, i));
        ASSERT_EQ(again.trials.size(), 1u);
        EXPECT_EQ(again.trials[0].status, TrialStatus::Pass);
        EXPECT_EQ(again.trials[0].witness, report.trials[i].witness);
        EXPECT_EQ(again.trials[0].values, report.trials[i].values);
    }
}

TEST(Replay, VersionMismatchRejected) {
    const auto report = verify(small(ReductionKind::Image, 1));
    auto doc = nlohmann::json::parse(trial_bundle(report, 0));
    doc["format_version"] = "imh-format-0";
    EXPECT_THROW(replay(doc.dump()), VersionError);
}

TEST(Report, JsonCarriesCounts) {
    const auto report = verify(small(ReductionKind::Image, 4));
    const auto doc = nlohmann::json::parse(report_json(report));
    EXPECT_EQ(doc.at("format_version"), std::string(kFormatVersion));
    EXPECT_EQ(doc.at("summary").at("passed"), 4);
    EXPECT_EQ(doc.at("trials").size(), 4u);
}

TEST(Generators, TriangleFreeAndBipartite) {
    for (std::uint64_t s = 1; s <= 50; ++s) {
        EXPECT_FALSE(oracle::has_triangle(gen_triangle_free(9, 0.6, s)));
        const Graph b = gen_random_bipartite(4, 0.5, s);
        EXPECT_EQ(b.num_vertices(), 8u);
        EXPECT_TRUE(oracle::two_colourable(b));
    }
}
