#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"
#include "commalg/ideal_io.hpp"
#include "commalg/registry.hpp"

using namespace commalg;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args, const std::string& registry = COMMALG_TEST_REGISTRY) {
  args.insert(args.begin(), {"commalg", "--registry", registry});
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("commalg_test_" + name);
  std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Cli, ListsRegisteredIds) {
  const CliRun r = run({"list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("depth1-n6m4"), std::string::npos);
  EXPECT_NE(r.out.find("projective-plane"), std::string::npos);
}

TEST(Cli, VerifyEntryAsJson) {
  const CliRun r = run({"verify", "fiber-q-x1sq-d2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["ok"], true);
  ASSERT_EQ(j["reports"].size(), 1u);
}

TEST(Cli, TamperedRegistryFails) {
  auto j = read_json_file(COMMALG_TEST_REGISTRY);
  for (auto& e : j["examples"]) {
    if (e["id"] == "fiber-q-x1sq-d2") e["expected"]["cokernel_length"]["value"] = 3;
  }
  const fs::path p = temp_file("tampered.json", j.dump());
  const CliRun r = run({"verify", "fiber-q-x1sq-d2", "--format", "table"}, p.string());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  fs::remove(p);
}

TEST(Cli, ExpectationWithoutClaimFails) {
  auto j = read_json_file(COMMALG_TEST_REGISTRY);
  for (auto& e : j["examples"]) {
    if (e["id"] == "semigroup-3-4") e["expected"]["no_such_claim"] = 1;
  }
  const fs::path p = temp_file("orphan.json", j.dump());
  EXPECT_EQ(run({"verify", "semigroup-3-4"}, p.string()).code, 1);
  fs::remove(p);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "no-such-entry"}).code, 2);
  EXPECT_EQ(run({"semigroup", "--gens", "4,6"}).code, 2);
  EXPECT_EQ(run({"family", "--n", "3", "--subsets", "1;1,2"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "list"}).code, 2);
  EXPECT_EQ(run({"list"}, "/nonexistent/registry.json").code, 2);
  const fs::path bad = temp_file("bad.json", "{ not json");
  EXPECT_EQ(run({"list"}, bad.string()).code, 2);
  fs::remove(bad);
}

TEST(Cli, ShortPrecisionExitsTwo) {
  EXPECT_EQ(run({"subalgebra", "--gens", "t^7,t^9", "--prec", "30"}).code, 2);
}

TEST(Cli, SuiteIsDeterministic) {
  const CliRun a = run({"--seed", "7", "--trials", "30", "suite"});
  const CliRun b = run({"suite", "--seed", "7", "--trials", "30", "--jobs", "3"});
  ASSERT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const CliRun c = run({"--seed", "8", "--trials", "30", "suite"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, AdHocCommands) {
  EXPECT_EQ(run({"semigroup", "--gens", "3,4", "--format", "table"}).code, 0);
  const CliRun csv = run({"semigroup", "--gens", "3,4", "--format", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "subject,id,status,computed,expected");
  EXPECT_NE(csv.out.find("\",frobenius,"), std::string::npos) << csv.out;
  EXPECT_EQ(run({"subalgebra", "--gens", "t^2+t^3,t^4,t^6", "--queries", "3", "--field", "fp:2"}).code, 0);
  const CliRun fam = run({"family", "--n", "4", "--subsets", "1,2;3,4", "--trace-powers", "1,2"});
  EXPECT_EQ(fam.code, 0) << fam.out;
  const fs::path ideal = temp_file("ideal.json", R"({"vars": ["x", "y", "z"], "gens": [[1, 1, 0], [0, 1, 1]]})");
  const CliRun d = run({"depth", "--ideal", ideal.string()});
  EXPECT_EQ(d.code, 0) << d.err;
  const auto claims = nlohmann::json::parse(d.out)["reports"][0]["claims"];
  EXPECT_EQ(claims[0]["id"], "depth");
  EXPECT_EQ(claims[0]["computed"], 1);
  EXPECT_EQ(run({"betti", "--ideal", ideal.string(), "--format", "csv"}).code, 0);
  fs::remove(ideal);
}
