#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "artin/report.hpp"
#include "test_support.hpp"

using namespace artin;
using json = nlohmann::json;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "artin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  const auto config = parse_command_line(static_cast<int>(argv.size()), argv.data(), out, err, o.code);
  if (config) o.code = run(*config, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string data(const std::string& name) { return std::string(ARTIN_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, CohomologyA2Json) {
  const Outcome o = cli({"cohomology", "--type", "A2", "--coeff", "Q", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  EXPECT_EQ(j["schema"], 1);
  const json& h = j["results"][0]["cohomology"];
  EXPECT_EQ(h["H^1"]["torsion"], json::array({"q - 1"}));
  EXPECT_EQ(h["H^2"]["torsion"], json::array({"q^2 - q + 1"}));
  EXPECT_EQ(h["H^0"]["torsion"], json::array());
}

TEST(Cli, JsonPolynomialsRoundTrip) {
  const Outcome o = cli({"milnor", "--type", "B3", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  for (const auto& row : j["results"][0]["milnor_fiber"]) {
    const std::string text = row["monodromy"]["charpoly"];
    EXPECT_EQ(LaurentPoly::parse(text).to_string(), text);
  }
  for (const auto& [name, group] : j["results"][0]["cohomology"].items()) {
    for (const std::string text : group["torsion"]) EXPECT_EQ(LaurentPoly::parse(text).to_string(), text);
  }
}

TEST(Cli, MilnorA1) {
  const Outcome o = cli({"milnor", "--type", "A1"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("b_0 = 1"), std::string::npos) << o.out;
  EXPECT_EQ(o.out.find("b_1"), std::string::npos);
}

TEST(Cli, MilnorReducibleFlag) {
  const Outcome o = cli({"milnor", "--type", "A1xA1", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  EXPECT_EQ(j["results"][0]["irreducible"], false);
  EXPECT_EQ(j["results"][0]["flags"][0], "outside irreducible hypothesis");
}

TEST(Cli, VerifyCocycleViolationNamesLine) {
  const Outcome o = cli({"verify", "--family", data("cocycle_violation.txt")});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("cocycle_violation.txt:5"), std::string::npos) << o.err;
}

TEST(Cli, FamilyPipeline) {
  const Outcome o = cli({"family", "--family", data("koszul3.txt"), "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  const json& r = j["results"][0];
  // gcd(1 - q^2, 1 + q, q^-1 - 1 + q) = 1: acyclic
  for (const auto& [name, group] : r["cohomology"].items()) EXPECT_EQ(group["dimension"], 0) << name;
  EXPECT_EQ(r["verification"]["passed"], true);
}

TEST(Cli, FamilyMatchesType) {
  const Outcome a = cli({"cohomology", "--family", data("a2_family.txt"), "--format", "csv"});
  const Outcome b = cli({"cohomology", "--type", "A2", "--format", "csv"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, BadInputsExitTwo) {
  EXPECT_EQ(cli({"cohomology", "--type", "Q7"}).code, 2);
  EXPECT_EQ(cli({"cohomology"}).code, 2);
  EXPECT_EQ(cli({"cohomology", "--type", "A2", "--family", data("a2_family.txt")}).code, 2);
  EXPECT_EQ(cli({"milnor", "--family", data("a2_family.txt")}).code, 2);
  EXPECT_EQ(cli({"cohomology", "--type", "A2", "--coeff", "Zp:4"}).code, 2);
  EXPECT_EQ(cli({"cohomology", "--type", "A2", "--format", "xml"}).code, 2);
  EXPECT_EQ(cli({"cohomology", "--type", "A2", "--degrees", "3:1"}).code, 2);
  EXPECT_EQ(cli({"verify", "--family", data("missing.txt")}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  const Outcome half = cli({"cohomology", "--family", data("half_unit.txt"), "--coeff", "Zp:2"});
  EXPECT_EQ(half.code, 2);
  EXPECT_NE(half.err.find("half_unit.txt:2"), std::string::npos) << half.err;
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(cli({"--help"}).code, 0); }

TEST(Cli, IntegerSelectorRunsFields) {
  const Outcome o = cli({"verify", "--type", "A2", "--coeff", "Z", "--primes", "2,3", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json j = json::parse(o.out);
  ASSERT_EQ(j["results"].size(), 3u);
  EXPECT_EQ(j["results"][0]["domain"], "Q");
  EXPECT_EQ(j["results"][1]["domain"], "Z/2");
  EXPECT_EQ(j["results"][2]["domain"], "Z/3");
}

TEST(Cli, DegreeFilterAndCsv) {
  const Outcome o = cli({"cohomology", "--type", "A3", "--format", "csv", "--degrees", "2:3"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out,
            "domain,degree,free_rank,torsion,dimension\n"
            "Q,2,0,\"q^2 - q + 1\",2\n"
            "Q,3,0,\"q^2 + 1\",2\n");
}

TEST(Cli, Deterministic) {
  const auto a = cli({"milnor", "--type", "D4", "--format", "json"});
  const auto b = cli({"milnor", "--type", "D4", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, WritesOutFile) {
  const auto path = std::filesystem::temp_directory_path() / "artin_cli_out.json";
  const Outcome o = cli({"milnor", "--type", "A2", "--format", "json", "--out", path.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j["results"][0]["milnor_fiber"][1]["betti"], 2);
  std::filesystem::remove(path);
}

TEST(Cli, WindowRadiusOverride) {
  const Outcome o = cli({"verify", "--type", "A2", "--window-radius", "40", "--format", "csv"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find(",40,true"), std::string::npos) << o.out;
}

TEST(Report, MilnorA2) {
  RunConfig config;
  config.type = "A2";
  const MilnorReport r = milnor_report(parse_coxeter_system("A2"), config, Domain::rationals());
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0].betti, 1);
  EXPECT_EQ(r.rows[1].betti, 2);
  EXPECT_EQ(r.rows[1].monodromy.eigenvalues->factors, (std::vector<std::pair<int, int>>{{6, 1}}));
  ASSERT_TRUE(r.verification.has_value());
  EXPECT_TRUE(r.verification->passed());
  EXPECT_TRUE(r.flags.empty());
}

TEST(Report, VerifyMismatchIsExitOne) {
  // A hand-built complex that is not the Salvetti complex it claims to be is
  // caught by the verification exit code through verify_complex.
  const CochainComplex bad =
      build_salvetti_complex(parse_coxeter_system("A2")).with_entry(0, 0, 0, artin::testing::P("1 + q"));
  const VerifyReport r = verify_complex(bad, true, {});
  EXPECT_FALSE(r.d_squared);
  EXPECT_FALSE(r.passed());
}
