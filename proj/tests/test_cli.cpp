#include "godeaux/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace godeaux;
using namespace godeaux::cli;

namespace {
Config quick() {
  Config c;
  c.primes = {11, 31};
  c.trials = 20;
  c.random_vectors_per_prime = 50;
  c.timestamp = false;
  return c;
}

const Check* find(const VerificationReport& r, const std::string& id) {
  for (const auto& e : r.entries())
    if (e.id == id) return &e;
  return nullptr;
}
}  // namespace

TEST(Report, JsonShapeAndOverallStatus) {
  VerificationReport r;
  r.metadata.primes = {11};
  r.add(check_equal("a", "x = 1", 1, 1, Provenance::paper));
  r.add(Check{"b", "unknown", "?", "?", Provenance::derived, Status::undecidable});
  EXPECT_TRUE(r.overall_pass());
  auto j = r.to_json();
  EXPECT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["entries"][0]["provenance"], "paper");
  EXPECT_EQ(j["entries"][1]["status"], "undecidable");
  EXPECT_EQ(j["summary"]["undecidable"], 1);
  EXPECT_EQ(j["metadata"]["pdo_budget"]["T"], 12);
  EXPECT_FALSE(j["metadata"].contains("timestamp"));
  r.add(check_true("c", "fails", false, Provenance::model_derived));
  EXPECT_FALSE(r.overall_pass());
  EXPECT_EQ(r.to_json()["summary"]["overall"], "fail");
  EXPECT_EQ(r.to_json()["entries"][2]["provenance"], "model-derived");
}

TEST(Config, JsonKeysAndErrors) {
  Config c;
  apply_config_json(nlohmann::json::parse(R"({"primes":[11,41],"trials":7,"seed":3,"pdo_budget":{"T":10,"d_bound":4},
                                              "coefficients":[1,0,0,0,0,0,0,1,1,1,0,2]})"),
                    c);
  EXPECT_EQ(c.primes, (std::vector<std::uint64_t>{11, 41}));
  EXPECT_EQ(c.trials, 7);
  EXPECT_EQ(c.seed, 3u);
  EXPECT_EQ(c.precision, 10);
  EXPECT_EQ(c.d_bound, 4);
  EXPECT_EQ(c.coefficients.a[11], 2);
  EXPECT_THROW(apply_config_json(nlohmann::json::parse(R"({"prime":[11]})"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::json::parse(R"({"primes":"11"})"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::json::parse(R"({"coefficients":[1,2]})"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::json::parse(R"({"pdo_budget":{"T":1.5}})"), c), ConfigError);
  EXPECT_THROW(apply_config_json(nlohmann::json::parse("[1]"), c), ConfigError);
}

TEST(Config, CsvParsing) {
  EXPECT_EQ(parse_int_csv("1, 2,3", "x"), (std::vector<std::int64_t>{1, 2, 3}));
  EXPECT_THROW(parse_int_csv("1,a", "x"), ConfigError);
  EXPECT_THROW(parse_int_csv("", "x"), ConfigError);
  EXPECT_THROW(to_primes({-11}), ConfigError);
}

TEST(Run, ExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(run("nope", quick(), out, err), kExitUsage);
  Config bad = quick();
  bad.primes = {7};
  EXPECT_EQ(run("surface", bad, out, err), kExitUsage);
  EXPECT_EQ(run("diophantine", quick(), out, err), kExitPass);
  EXPECT_EQ(run("monomials", quick(), out, err), kExitPass);
  Config singular = quick();
  singular.coefficients = quintic::QuinticCoefficients::single(0);
  EXPECT_EQ(run("surface", singular, out, err), kExitFail);
}

TEST(Run, SurfaceFermatPasses) {
  auto c = quick();
  c.coefficients = quintic::QuinticCoefficients::fermat();
  const auto r = build_report("surface", c);
  EXPECT_TRUE(r.overall_pass());
  const auto* e = find(r, "surface.smoothness_evidence");
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->actual, "smooth (multi-prime evidence, 2 primes)");
}

TEST(Run, AllReportsEveryHeadlineCount) {
  const auto r = build_report("all", quick());
  const std::vector<std::pair<std::string, std::string>> headline{
      {"monomials.count", "12"},          {"lattice.root_count", "240"},
      {"counts.candidates", "1200"},      {"counts.orbits", "120"},
      {"counts.good_lower_bound", "1080"}, {"counts.excellent_lower_bound", "840"},
      {"family.dimension", "8"},          {"rr.euler_number", "11"},
      {"rr.b2", "9"},                     {"rr.curve_genus", "2"},
      {"rr.chi_D", "0"},                  {"diophantine.pullback_identity", "15"}};
  for (const auto& [id, value] : headline) {
    const auto* e = find(r, id);
    ASSERT_NE(e, nullptr) << id;
    EXPECT_EQ(e->actual, value) << id;
    EXPECT_EQ(e->status, Status::pass) << id;
  }
  EXPECT_EQ(find(r, "counts.excellent_lower_bound")->provenance, Provenance::model_derived);
  EXPECT_EQ(find(r, "rr.h0_K_plus_E")->provenance, Provenance::assumed_per_paper);
}

TEST(Run, JsonIsDeterministicWithoutTimestamp) {
  const auto a = build_report("pdo", quick()).to_json().dump(2);
  const auto b = build_report("pdo", quick()).to_json().dump(2);
  EXPECT_EQ(a, b);
  auto stamped = quick();
  stamped.timestamp = true;
  EXPECT_TRUE(build_report("diophantine", stamped).to_json()["metadata"].contains("timestamp"));
}
