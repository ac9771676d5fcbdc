// End-to-end tests of the command-line tool: spawns the real binary against
// the shipped fixtures and checks outputs and exit codes.

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "grasstensor/json_io.hpp"

using grasstensor::Json;

namespace {

const std::string kCli = GRASSTENSOR_CLI_PATH;
const std::string kFixtures = GRASSTENSOR_FIXTURES_DIR;

struct RunResult {
    int exit_code = -1;
    Json output;
    bool has_output = false;
};

RunResult run(const std::string& args, const std::string& out_file = "") {
    std::string command = kCli + " " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (!out_file.empty()) {
        std::ifstream in(out_file);
        if (in) {
            r.output = Json::parse(in, nullptr, false);
            r.has_output = !r.output.is_discarded();
        }
    }
    return r;
}

std::string tmp_path(const std::string& name) { return "/tmp/grasstensor_test_" + name; }

}  // namespace

TEST(Cli, BuildWritesTensorAndSidecar) {
    const std::string out = tmp_path("built.json");
    const auto r = run("build --input " + kFixtures + "/trifocal_p4_p3p2p2.json --output " + out, out);
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_TRUE(r.has_output);
    EXPECT_EQ(r.output["dims"], (Json::array({6, 3, 3})));

    std::ifstream meta(out + ".meta.json");
    ASSERT_TRUE(meta.good());
    const Json sidecar = Json::parse(meta);
    EXPECT_EQ(sidecar["sign_convention"], "block-ascending-v1");
    EXPECT_EQ(sidecar["profile"], (Json::array({2, 2, 1})));
}

TEST(Cli, RankReportsFormulaAndOracle) {
    const std::string out = tmp_path("rank.json");
    const auto r = run("rank --input " + kFixtures + "/canonical_k7_h644_a332.json --output " + out,
                       out);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.output["frank_formula"], (Json::array({31, 10, 10})));
    EXPECT_EQ(r.output["frank_oracle"], (Json::array({31, 10, 10})));
    EXPECT_EQ(r.output["per_mode"][0]["zero_rows"], (Json::array({20, 30, 34, 35})));
}

TEST(Cli, RankModeFlagRestrictsTheReport) {
    const std::string out = tmp_path("rank_mode.json");
    const auto r = run("rank --mode 2 --input " + kFixtures +
                           "/canonical_k7_h644_a332.json --output " + out,
                       out);
    ASSERT_EQ(r.exit_code, 0);
    ASSERT_EQ(r.output["per_mode"].size(), 1u);
    EXPECT_EQ(r.output["per_mode"][0]["mode"], 2);
}

TEST(Cli, RankOnNonGenericSetupSkipsTheFormula) {
    const std::string out = tmp_path("rank_nongeneric.json");
    const auto r = run("rank --input " + kFixtures + "/nongeneric_p4_rank_drop.json --output " + out,
                       out);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_FALSE(r.output["genericity"].get<bool>());
    EXPECT_TRUE(r.output["frank_formula"].is_null());
    EXPECT_EQ(r.output["frank_oracle"][0], 2);
}

TEST(Cli, CoreMethodsAgreeOnDims) {
    const std::string out1 = tmp_path("core_hosvd.json");
    const auto r1 = run("core --method hosvd --input " + kFixtures +
                            "/trifocal_p4_p3p2p2.json --output " + out1,
                        out1);
    ASSERT_EQ(r1.exit_code, 0);
    EXPECT_EQ(r1.output["dims"], (Json::array({5, 3, 3})));

    const std::string out2 = tmp_path("core_canonical.json");
    const auto r2 = run("core --method canonical --input " + kFixtures +
                            "/trifocal_p4_p3p2p2.json --output " + out2,
                        out2);
    ASSERT_EQ(r2.exit_code, 0);
    EXPECT_EQ(r2.output["dims"], (Json::array({5, 3, 3})));
    EXPECT_LT(r2.output["residuals"]["reconstruct"].get<double>(), 1e-9);
}

TEST(Cli, VerifyPassesOnTheWorkedExample) {
    const std::string out = tmp_path("verify.json");
    const auto r = run("verify --input " + kFixtures + "/trifocal_p4_p3p2p2.json --output " + out,
                       out);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.output["all_passed"].get<bool>());
}

TEST(Cli, VerifyFailsOnNonGenericSetup) {
    const auto r = run("verify --input " + kFixtures + "/nongeneric_p4_rank3.json");
    EXPECT_EQ(r.exit_code, 1);
}

TEST(Cli, VerifyDetectsTamperedTensorFile) {
    const std::string tensor_file = tmp_path("tamper.json");
    auto r = run("build --input " + kFixtures + "/trifocal_p4_p3p2p2.json --output " + tensor_file,
                 tensor_file);
    ASSERT_EQ(r.exit_code, 0);

    Json tampered = r.output;
    tampered["entries"][0] = "1";  // the true entry is zero
    grasstensor::write_json_file(tensor_file, tampered);
    const auto verify = run("verify --tensor " + tensor_file + " --input " + kFixtures +
                            "/trifocal_p4_p3p2p2.json");
    EXPECT_EQ(verify.exit_code, 1);

    // untampered file passes
    r = run("build --input " + kFixtures + "/trifocal_p4_p3p2p2.json --output " + tensor_file,
            tensor_file);
    const auto clean = run("verify --tensor " + tensor_file + " --input " + kFixtures +
                           "/trifocal_p4_p3p2p2.json");
    EXPECT_EQ(clean.exit_code, 0);
}

TEST(Cli, GenProducesGenericSetupWithExpectedRank) {
    const std::string out = tmp_path("gen5.json");
    const auto r = run("gen --k 8 --view-dims 5 5 5 --profile 1 4 4 --seed 1 --output " + out, out);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_GE(r.output["gen"]["attempts"].get<int>(), 1);

    const std::string rank_out = tmp_path("gen5_rank.json");
    const auto rank = run("rank --input " + out + " --output " + rank_out, rank_out);
    ASSERT_EQ(rank.exit_code, 0);
    EXPECT_EQ(rank.output["frank_oracle"], (Json::array({6, 12, 12})));
}

TEST(Cli, ExitCodes) {
    const std::string bad = tmp_path("bad.json");
    {
        std::ofstream f(bad);
        f << "this is not json";
    }
    EXPECT_EQ(run("build --input " + bad).exit_code, 2);
    EXPECT_EQ(run("build --input " + tmp_path("missing.json")).exit_code, 2);

    // profile not summing to k+1
    Json setup = grasstensor::load_json_file(kFixtures + "/trifocal_p4_p3p2p2.json");
    setup["profile"] = {2, 2, 2};
    const std::string semantic = tmp_path("semantic.json");
    grasstensor::write_json_file(semantic, setup);
    EXPECT_EQ(run("build --input " + semantic).exit_code, 3);

    // impossible profile for gen
    EXPECT_EQ(run("gen --k 5 --view-dims 2 4 4 --profile 3 2 1").exit_code, 3);

    // dimensions that admit no generic setup exhaust the attempt budget
    EXPECT_EQ(run("gen --k 4 --view-dims 2 2 2 --profile 2 2 1").exit_code, 4);

    // canonical refuses non-generic inputs
    EXPECT_EQ(run("canonical --input " + kFixtures + "/nongeneric_p4_rank3.json").exit_code, 3);
}

TEST(Cli, EnvironmentToleranceOverride) {
    // an absurdly tight tolerance makes the numerical checks fail
    const std::string cmd = "GRASSTENSOR_TOL=1e-30 " + kCli + " verify --input " + kFixtures +
                            "/trifocal_p4_p3p2p2.json >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    EXPECT_EQ(WIFEXITED(status) ? WEXITSTATUS(status) : -1, 1);
}
