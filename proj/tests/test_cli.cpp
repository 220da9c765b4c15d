#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "imh/io.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs `imh <args>` through the shell, capturing stdout.
CliRun cli(const std::string& args) {
    const std::string cmd = std::string(IMH_CLI_PATH) + " " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("imh_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(path(name)) << text; }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, UsageErrorsExitOne) {
    EXPECT_EQ(cli("").code, 1);
    EXPECT_EQ(cli("frobnicate").code, 1);
    EXPECT_EQ(cli("solve knapsack").code, 1);
}

TEST_F(Cli, InputErrorsExitTwo) {
    write("bad.dimacs", "p edge 2 1\ne 1 3\n");
    EXPECT_EQ(cli("solve clique -i " + path("bad.dimacs")).code, 2);
    EXPECT_EQ(cli("gen complete 6 | " IMH_CLI_PATH " reduce im-hard -k 1").code, 2);
    EXPECT_EQ(cli("solve clique -i " + path("missing.dimacs")).code, 2);
}

TEST_F(Cli, GenerateAndSolve) {
    const CliRun g = cli("gen complete 5");
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(imh::parse_graph(g.out).num_edges(), 10u);
    const CliRun s = cli("gen complete 5 | " IMH_CLI_PATH " solve clique");
    ASSERT_EQ(s.code, 0);
    const auto w = imh::parse_witness(s.out);
    EXPECT_EQ(w.vertices.size(), 5u);
    const CliRun r = cli("gen random 9 0.4 --seed 3");
    EXPECT_EQ(r.out, cli("gen random 9 0.4 --seed 3").out);
}

TEST_F(Cli, BudgetExhaustionExitsThree) {
    EXPECT_EQ(cli("gen random 70 0.5 --seed 1 | " IMH_CLI_PATH " solve clique --target 12 --budget 3").code, 3);
}

TEST_F(Cli, CliqueGapPipelineLiftsAndExtracts) {
    ASSERT_EQ(cli("gen complete 4 -o " + path("g.dimacs")).code, 0);
    ASSERT_EQ(cli("reduce clique-gap -k 2 -i " + path("g.dimacs") + " -o " + path("h.dimacs")).code, 0);
    const CliRun solved = cli("solve clique -i " + path("h.dimacs") + " -o " + path("w.json"));
    ASSERT_EQ(solved.code, 0);
    const CliRun back = cli("extract -r " + path("h.dimacs") + " -w " + path("w.json"));
    ASSERT_EQ(back.code, 0);
    EXPECT_EQ(imh::parse_witness(back.out).vertices.size(), 4u);
    write("c.json", imh::emit_witness({imh::WitnessKind::Clique, {0, 1}, {}}));
    const CliRun up = cli("lift -r " + path("h.dimacs") + " -w " + path("c.json"));
    ASSERT_EQ(up.code, 0);
    EXPECT_EQ(imh::parse_witness(up.out).vertices.size(), 5u);
}

TEST_F(Cli, ImageBundleAndSidecar) {
    ASSERT_EQ(cli("gen random 7 0.4 --seed 2 -o " + path("g.dimacs")).code, 0);
    ASSERT_EQ(cli("reduce image --bundle -i " + path("g.dimacs") + " -o " + path("b.json")).code, 0);
    ASSERT_EQ(cli("reduce image -i " + path("g.dimacs") + " --sidecar " + path("s.json") + " -o " + path("h.dimacs"))
                  .code,
              0);
    ASSERT_EQ(cli("solve mim -i " + path("b.json") + " -o " + path("m.json")).code, 0);
    for (const char* carrier : {"b.json", "s.json", "h.dimacs"}) {
        const CliRun mis = cli("extract -r " + path(carrier) + " -w " + path("m.json"));
        ASSERT_EQ(mis.code, 0) << carrier;
        EXPECT_EQ(imh::parse_witness(mis.out).kind, imh::WitnessKind::Mis);
    }
}

TEST_F(Cli, UndersizedWitnessIsAnInputError) {
    ASSERT_EQ(cli("gen complete 4 | " IMH_CLI_PATH " reduce clique-gap -k 2 -o " + path("h.dimacs")).code, 0);
    write("w.json", imh::emit_witness({imh::WitnessKind::Clique, {0, 1, 2}, {}}));
    EXPECT_EQ(cli("extract -r " + path("h.dimacs") + " -w " + path("w.json")).code, 2);
}

TEST_F(Cli, VerifyAndReplay) {
    const CliRun v = cli("verify image --trials 5 -o " + path("r.json") + " --emit-bundle 2 --bundle-output " +
                      path("t.json"));
    ASSERT_EQ(v.code, 0);
    EXPECT_EQ(cli("replay " + path("t.json") + " -o " + path("again.json")).code, 0);
    std::ifstream in(path("t.json"));
    std::stringstream text;
    text << in.rdbuf();
    std::string bumped = text.str();
    const auto at = bumped.find(imh::kFormatVersion);
    ASSERT_NE(at, std::string::npos);
    bumped.replace(at, imh::kFormatVersion.size(), "imh-format-0");
    write("old.json", bumped);
    EXPECT_EQ(cli("replay " + path("old.json")).code, 2);
}
