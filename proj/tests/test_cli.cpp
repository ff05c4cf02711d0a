#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"

using pcg_paradox::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pcg_paradox::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(PCG_SAMPLES_DIR) + "/" + name; }

}  // namespace

TEST(Cli, VerifyNamedState) {
  const auto r = run({"verify", "--family", "S", "--expect-paradox"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Paradox");
  EXPECT_EQ(j["family"], "RankDiffer");
  EXPECT_DOUBLE_EQ(j["success_probability"].get<double>(), 0.25);
}

TEST(Cli, VerifyColorableExitsTwoWhenParadoxExpected) {
  EXPECT_EQ(run({"verify", sample("path_colorable.json")}).code, 0);
  EXPECT_EQ(run({"verify", sample("path_colorable.json"), "--expect-paradox"}).code, 2);
}

TEST(Cli, VerifyQuditFamily) {
  const auto r = run({"verify", "--family", "s3", "--d", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["family"], "ModDExhaustion");
  EXPECT_EQ(j["conditions"].size(), 4u);
}

TEST(Cli, ColorReportsBothRoutes) {
  const auto r = run({"color", sample("path_colorable.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["brute_force"]["count"], 2);
  EXPECT_EQ(j["brute_force"]["first"], "GRR");
  EXPECT_EQ(j["gf2"]["coloring"], "RGG");
  EXPECT_EQ(j["agree"], true);

  const auto red = json::parse(run({"color", sample("triangle_red.json")}).out);
  EXPECT_EQ(red["colorable"], false);
  EXPECT_TRUE(red["gf2"]["coloring"].is_null());
}

TEST(Cli, ValidateRejectsNesting) {
  const auto r = run({"validate", sample("nested_invalid.json")});
  EXPECT_EQ(r.code, 65);
  EXPECT_EQ(json::parse(r.err)["error"], "ContainmentViolation");
  EXPECT_EQ(run({"validate", sample("triangle_one_red.json")}).code, 0);
}

TEST(Cli, EnumerateCsv) {
  const auto r = run({"enumerate", "--n", "3"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 8);
  EXPECT_NE(r.out.find("\"n=3:212G,213G,223R\",false"), std::string::npos);
}

TEST(Cli, MetricsUnderNoise) {
  const auto ideal = json::parse(run({"metrics", "--family", "S"}).out);
  EXPECT_NEAR(ideal["tripartite_negativity"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(ideal["fidelity"].get<double>(), 1.0, 1e-12);

  const auto noisy = json::parse(run({"metrics", "--family", "S", "--noise", "0.93"}).out);
  ASSERT_EQ(noisy["conditional_expectations"].size(), 3u);
  for (const auto& c : noisy["conditional_expectations"]) {
    EXPECT_NEAR(c["expectation"].get<double>(), -0.93, 1e-9);
    EXPECT_EQ(c["ideal"], -1);
  }
}

TEST(Cli, SampleIsReproducible) {
  const std::vector<std::string> args{"sample", "--family", "S", "--shots", "5000", "--seed", "7", "--basis", "ZXX"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"sample", "--family", "S", "--shots", "5000", "--seed", "8", "--basis", "ZXX"}).out);
}

TEST(Cli, CompareTable) {
  const auto r = run({"compare", "--n", "5"});
  EXPECT_EQ(r.out, "n,pigeonhole,generalized_hardy,simulated\n3,0.25,0.25,0.25\n5,0.166666666666667,0.0625,0.166666666666667\n");
}

TEST(Cli, StateKets) {
  EXPECT_EQ(run({"state", "--family", "S_prime", "--format", "ket"}).out, "+0.5|000> +0.5|011> +0.5|101> -0.5|110>\n");
  EXPECT_EQ(run({"state", "--family", "pcg", "--pcg", sample("bell_pair_relaxed.json"), "--format", "ket"}).out,
            "+0.707106781187|00> +0.707106781187|11>\n");
}

TEST(Cli, ResidualOnRelaxedGraph) {
  const auto r = run({"residual", sample("triangle_red.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["hardy_projector_residual"], 0.0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 64);
  EXPECT_EQ(run({"bogus"}).code, 64);
  EXPECT_EQ(run({"enumerate"}).code, 64);
  EXPECT_EQ(run({"state", "--family", "nope"}).code, 64);
  EXPECT_EQ(run({"--help"}).code, 0);

  const auto even = run({"state", "--family", "s1", "--n", "4"});
  EXPECT_EQ(even.code, 65);
  EXPECT_EQ(json::parse(even.err)["error"], "EvenN");
  EXPECT_EQ(run({"validate", sample("does_not_exist.json")}).code, 65);
  EXPECT_EQ(run({"metrics", "--family", "S", "--noise", "2"}).code, 65);
}
