#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "jensen/cli.hpp"
#include "jensen/harness.hpp"
#include "jensen/serialization.hpp"

using jensen::Json;

namespace {

const std::string kGolden = JENSEN_GOLDEN_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = jensen::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const std::string kSample = R"({"points": [[1], [2], [4]], "weights": [0.2, 0.3, 0.5]})";
const std::string kDist = R"({"probs": [0.2, 0.3, 0.5]})";

}  // namespace

TEST(CliGolden, Chain) {
    const auto r = run({"chain", "--function", "neg_log", "--input", kGolden + "/sample.json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, slurp(kGolden + "/chain.expected.json"));
    const auto j = Json::parse(r.out);
    EXPECT_NEAR(j["gap"].get<double>(), fixtures::kNegLogGap, 1e-6);
    EXPECT_NEAR(j["dg_bound"].get<double>(), fixtures::kNegLogDg, 1e-6);
    EXPECT_NEAR(j["cbs_bound"].get<double>(), fixtures::kNegLogCbs, 1e-6);
    EXPECT_NEAR(j["box_bound"].get<double>(), fixtures::kNegLogBox, 1e-6);
}

TEST(CliGolden, Entropy) {
    const auto r = run({"entropy", "--input", kGolden + "/dist.json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, slurp(kGolden + "/entropy.expected.json"));
    const auto j = Json::parse(r.out);
    EXPECT_NEAR(j["shannon_entropy"].get<double>(), fixtures::kEntropy, 1e-6);
    EXPECT_NEAR(j["certificates"][0]["bound"].get<double>(), 0.14, 1e-15);
    EXPECT_NEAR(j["certificates"][1]["bound"].get<double>(), 0.225, 1e-15);
}

TEST(CliGolden, Verify) {
    const auto r = run({"verify", "--seed", "42", "--trials", "1000"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, slurp(kGolden + "/verify.expected.json"));
    EXPECT_EQ(Json::parse(r.out)["total_failures"].get<int>(), 0);
}

TEST(Cli, InProcessValuesSurviveSerialization) {
    const auto r = run({"chain", "--function", "neg_log", "--inline", kSample});
    const auto j = Json::parse(r.out);
    const jensen::WeightedSample s({{1.0}, {2.0}, {4.0}}, {0.2, 0.3, 0.5});
    const auto f = jensen::ConvexFunction::make("neg_log");
    EXPECT_EQ(j["gap"].get<double>(), jensen::jensen_gap(f, s));
    EXPECT_EQ(j["cbs_bound"].get<double>(), jensen::cbs_bound(f, s));
}

TEST(Cli, FunctionFromInputAndJsonFlag) {
    const auto a = run({"gap", "--inline", R"({"function": "neg_log", "points": [[1], [2]], "weights": [1, 1]})"});
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_NEAR(Json::parse(a.out)["gap"].get<double>(), fixtures::kNegLogTwoPointGap, 1e-15);
    const auto b = run({"gap", "--function", R"({"name": "power_p", "params": {"p": 3}})", "--inline",
                        R"({"points": [1, 2], "weights": [1, 1]})"});
    EXPECT_EQ(b.code, 0) << b.err;
    EXPECT_NEAR(Json::parse(b.out)["gap"].get<double>(), 4.5 - 3.375, 1e-15);
}

TEST(Cli, InvalidCertificateExitsOne) {
    const auto r = run({"chain", "--function", "neg_log", "--inline",
                        R"({"points": [[1], [2], [4]], "weights": [0.2, 0.3, 0.5], "box": {"lower": [1.5], "upper": [2]}})"});
    EXPECT_EQ(r.code, 1) << r.err;
    EXPECT_FALSE(Json::parse(r.out)["valid"].get<bool>());
    const auto bad_grad = run({"chain", "--function", "neg_log", "--inline",
                               R"({"points": [[1], [2]], "weights": [1, 1], "gradient_bounds": {"lower": [-0.9], "upper": [-0.5]}})"});
    EXPECT_EQ(bad_grad.code, 1) << bad_grad.err;
}

TEST(Cli, UsageAndInputErrorsExitTwo) {
    const auto malformed = run({"entropy", "--inline", "{\"probs\": [0.2, 0.3"});
    EXPECT_EQ(malformed.code, 2);
    EXPECT_FALSE(malformed.err.empty());

    const auto unknown = run({"gap", "--function", "cosh", "--inline", kSample});
    EXPECT_EQ(unknown.code, 2);
    EXPECT_NE(unknown.err.find("cosh"), std::string::npos);

    const auto no_alpha = run({"renyi", "--inline", kDist});
    EXPECT_EQ(no_alpha.code, 2);
    EXPECT_NE(no_alpha.err.find("alpha"), std::string::npos);

    const auto domain = run({"gap", "--function", "neg_log", "--inline", R"({"points": [[-1], [2]]})"});
    EXPECT_EQ(domain.code, 2);
    EXPECT_NE(domain.err.find("coordinate"), std::string::npos);

    const auto missing_field = run({"entropy", "--inline", R"({"probabilities": [0.5, 0.5]})"});
    EXPECT_EQ(missing_field.code, 2);
    EXPECT_NE(missing_field.err.find("probs"), std::string::npos);

    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"verify", "--trials", "0"}).code, 2);
    EXPECT_EQ(run({"entropy", "--inline", kDist, "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"entropy", "--input", kGolden + "/does_not_exist.json"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, CountsAndStripZeros) {
    const std::string counts = R"({"counts": [2, 0, 3, 5]})";
    EXPECT_EQ(run({"entropy", "--inline", counts}).code, 2);
    const auto stripped = run({"entropy", "--inline", counts, "--strip-zeros"});
    EXPECT_EQ(stripped.code, 0) << stripped.err;
    const auto j = Json::parse(stripped.out);
    EXPECT_EQ(j["n"].get<int>(), 3);
    EXPECT_NEAR(j["shannon_entropy"].get<double>(), fixtures::kEntropy, 1e-15);
}

TEST(Cli, RenyiAndEnergyAndMeans) {
    const auto r = run({"renyi", "--alpha", "0.5", "--inline", kDist});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_NEAR(j["renyi_entropy"].get<double>(), fixtures::kRenyiHalf, 1e-15);

    const auto e = run({"energy", "--inline", kDist});
    EXPECT_EQ(e.code, 0) << e.err;
    EXPECT_NEAR(Json::parse(e.out)["informational_energy"].get<double>(), 0.38, 1e-15);

    const auto m = run({"means", "--inline", R"({"values": [1, 2, 4], "weights": [0.2, 0.3, 0.5]})"});
    EXPECT_EQ(m.code, 0) << m.err;
    EXPECT_NEAR(Json::parse(m.out)["geometric"].get<double>(), fixtures::kGeometric, 1e-15);
}

TEST(Cli, TableFormat) {
    const auto r = run({"entropy", "--inline", kDist, "--format", "table"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("shannon_entropy"), std::string::npos);
    EXPECT_NE(r.out.find("t4"), std::string::npos);
    EXPECT_THROW(Json::parse(r.out), Json::parse_error);
}

TEST(Cli, NegativeToleranceRejected) {
    EXPECT_EQ(run({"entropy", "--inline", kDist, "--tol-abs=-1"}).code, 2);
}

TEST(Cli, ReplayFailureRecord) {
    // records forced by a negative tolerance, which only the library API accepts
    jensen::SuiteConfig c;
    c.seed = 3;
    c.trials = 5;
    c.tolerance = jensen::Tolerance{0.0, -1e-3};
    const auto report = jensen::to_json(jensen::run_suite(c));
    ASSERT_FALSE(report["failures"].empty());
    const std::string record = report["failures"][0].dump();
    const auto r = run({"replay", "--inline", record});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = Json::parse(r.out);
    EXPECT_FALSE(j["reproduced"].get<bool>());
    EXPECT_EQ(run({"replay", "--inline", R"({"kind": "teapot"})"}).code, 2);
}
