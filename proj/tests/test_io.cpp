#include <gtest/gtest.h>

#include "json.hpp"

#include "imh/io.hpp"

using namespace imh;

namespace {

const ReductionKind kAll[] = {ReductionKind::CliqueGap, ReductionKind::ImHard,     ReductionKind::Image,
                              ReductionKind::HamClosure, ReductionKind::Blowup, ReductionKind::HamBipClosure};

Graph source_for(ReductionKind kind) {
    switch (kind) {
    case ReductionKind::ImHard:
        return gen_complete(7);
    case ReductionKind::Blowup:
        return gen_path(2);
    case ReductionKind::HamBipClosure:
        return gen_complete_bipartite(2, 2);
    default:
        return gen_cycle(5);
    }
}

}  // namespace

TEST(Reductions, KindNamesRoundTrip) {
    for (ReductionKind k : kAll)
        EXPECT_EQ(reduction_kind_from(to_string(k)), k);
    EXPECT_EQ(to_string(ReductionKind::ImHard), "im-hard");
    EXPECT_THROW(reduction_kind_from("nope"), ParseError);
}

TEST(Sidecar, RebuildsEveryReduction) {
    for (ReductionKind kind : kAll) {
        const AnyReduction r = run_reduction(kind, source_for(kind), 1);
        EXPECT_EQ(kind_of(r), kind);
        const std::string side = emit_sidecar(r);
        const auto doc = nlohmann::json::parse(side);
        EXPECT_EQ(doc.at("format_version"), std::string(kFormatVersion));
        EXPECT_EQ(doc.at("reduction"), std::string(to_string(kind)));
        const AnyReduction back = load_sidecar(side, &reduced_graph(r));
        EXPECT_EQ(reduced_graph(back), reduced_graph(r));
        EXPECT_EQ(source_graph(back), source_graph(r));
    }
}

TEST(Sidecar, TargetForParameterisedReductions) {
    const auto im = nlohmann::json::parse(emit_sidecar(run_reduction(ReductionKind::ImHard, gen_complete(7), 1)));
    EXPECT_EQ(im.at("target"), 18);
    EXPECT_EQ(im.at("k"), 1);
    const auto cg = nlohmann::json::parse(emit_sidecar(run_reduction(ReductionKind::CliqueGap, gen_path(3), 2)));
    EXPECT_EQ(cg.at("target"), 5);
}

TEST(Sidecar, MismatchedGraphRejected) {
    const AnyReduction r = run_reduction(ReductionKind::Image, gen_cycle(5), 1);
    const Graph other = gen_complete(10);
    EXPECT_THROW(load_sidecar(emit_sidecar(r), &other), ParseError);
}

TEST(Sidecar, VersionMismatchRejected) {
    auto doc = nlohmann::json::parse(emit_sidecar(run_reduction(ReductionKind::Image, gen_cycle(5), 1)));
    doc["format_version"] = "imh-format-0";
    EXPECT_THROW(load_sidecar(doc.dump()), VersionError);
    EXPECT_THROW(check_version("imh-format-2"), VersionError);
    EXPECT_NO_THROW(check_version(kFormatVersion));
}

TEST(Bundle, RoundTrip) {
    for (ReductionKind kind : kAll) {
        const AnyReduction r = run_reduction(kind, source_for(kind), 1);
        const AnyReduction back = load_bundle(emit_bundle(r));
        EXPECT_EQ(reduced_graph(back), reduced_graph(r));
        EXPECT_EQ(kind_of(back), kind);
    }
}

TEST(EmbeddedReduction, PipedGraphCarriesItsReduction) {
    const AnyReduction r = run_reduction(ReductionKind::CliqueGap, gen_cycle(5), 2);
    const std::string text = emit_reduced_graph(r);
    EXPECT_EQ(text.rfind("c imh-reduction ", 0), 0u);
    EXPECT_EQ(parse_graph(text), reduced_graph(r));
    const auto back = load_reduction(text);
    ASSERT_TRUE(back);
    EXPECT_EQ(kind_of(*back), ReductionKind::CliqueGap);
    EXPECT_EQ(std::get<CliqueGapOutput>(*back).k, 2u);
    EXPECT_FALSE(load_reduction(emit_graph(gen_cycle(5))));
    EXPECT_TRUE(load_reduction(emit_sidecar(r)));
    EXPECT_TRUE(load_reduction(emit_bundle(r)));
}
