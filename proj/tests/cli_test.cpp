#include <sstream>

#include <gtest/gtest.h>

#include "cli/command.hpp"

namespace hermquad::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  const Result r = run_cli(args);
  EXPECT_EQ(r.code, expected_code) << r.out << r.err;
  return Json::parse(r.out);
}

TEST(Parse, PoincareCommand) {
  const Invocation inv = parse_command({"poincare", "--variety", "hermitian", "--n", "3"});
  const auto* c = std::get_if<cmd::Poincare>(&inv.command);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->variety, Variety::Hermitian);
  EXPECT_EQ(c->n, 3);
  EXPECT_FALSE(inv.json);
}

TEST(Parse, SweepCommand) {
  const Invocation inv = parse_command({"motive", "verify-krashen", "--range", "2..50", "--json"});
  const auto* c = std::get_if<cmd::MotiveVerifyKrashen>(&inv.command);
  ASSERT_NE(c, nullptr);
  ASSERT_TRUE(c->target.range.has_value());
  EXPECT_EQ(c->target.range->from, 2);
  EXPECT_EQ(c->target.range->to, 50);
  EXPECT_TRUE(inv.json);
}

TEST(Parse, UsageErrorsNameTheFlag) {
  try {
    (void)parse_command({"poincare", "--variety", "hermitian", "--n", "1"});
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("--n"), std::string::npos);
  }
  EXPECT_THROW((void)parse_command({"motive", "nh", "--n", "3", "--range", "2..4"}), UsageError);
  EXPECT_THROW((void)parse_command({"motive", "nh", "--range", "5..4"}), UsageError);
  EXPECT_THROW((void)parse_command({"form", "hilbert", "--x", "2", "--y", "3", "--place", "4"}), UsageError);
  EXPECT_THROW((void)parse_command({"form", "check-mh", "--a", "4", "--qdiag", "1,1"}), UsageError);
  EXPECT_THROW((void)parse_command({"form", "det", "--qdiag", "1,0"}), UsageError);
  EXPECT_THROW((void)parse_command({"nonsense"}), UsageError);
  EXPECT_THROW((void)parse_command({}), UsageError);
}

TEST(Run, UsageExitCodeIsTwo) {
  const Result r = run_cli({"poincare", "--variety", "hermitian", "--n", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("--n"), std::string::npos);
}

TEST(Run, HumanOutput) {
  const Result r = run_cli({"poincare", "--variety", "hermitian", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "P(t) = 1 + 2t + 2t² + t³\n");
}

TEST(Run, Eta2) {
  const Json j = run_json({"rost", "eta2", "--n", "3"});
  EXPECT_EQ(j["command"], "rost eta2");
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["payload"]["eta2_parity"], 1);
  EXPECT_EQ(j["version"], kSchemaVersion);
}

TEST(Run, KrashenSingleAndSweep) {
  const Json j = run_json({"motive", "verify-krashen", "--n", "7"});
  EXPECT_EQ(j["payload"]["holds"], true);
  EXPECT_EQ(j["payload"]["lhs"], j["payload"]["rhs"]);
  const Json s = run_json({"motive", "verify-krashen", "--range", "2..50"});
  EXPECT_EQ(s["payload"]["holds"], true);
  EXPECT_EQ(s["payload"]["checked"], 49);
  EXPECT_TRUE(s["payload"]["first_counterexample"].is_null());
}

TEST(Run, CheckMhViolation) {
  const Json j = run_json({"form", "check-mh", "--a", "2", "--qdiag", "1,1,1,1,1,1"}, 1);
  EXPECT_EQ(j["status"], "violated");
  EXPECT_EQ(j["payload"]["passes"], false);
  EXPECT_EQ(j["payload"]["hyperbolic_over_L"], false);
  EXPECT_FALSE(j["payload"]["witnesses"].empty());
  for (const auto& w : j["payload"]["witnesses"]) {
    EXPECT_TRUE(w.contains("place"));
    EXPECT_TRUE(w.contains("clause"));
  }
}

TEST(Run, CheckMhFromHermitianEntries) {
  const Json j = run_json({"form", "check-mh", "--a", "-1", "--bdiag", "1,1,1"});
  EXPECT_EQ(j["payload"]["passes"], true);
}

TEST(Run, NegativeValuesParse) {
  const Json j = run_json({"form", "isotropic", "--qdiag", "-1,1"});
  EXPECT_EQ(j["payload"]["isotropic"], true);
  const Json h = run_json({"form", "hilbert", "--x", "-1", "--y", "-1", "--place", "inf"});
  EXPECT_EQ(h["payload"]["symbol"], -1);
  const Json t = run_json({"form", "trace", "--a", "-1", "--bdiag", "1,1,1"});
  EXPECT_EQ(t["payload"]["q"], Json::parse("[1,1,1,1,1,1]"));
}

TEST(Run, LibraryErrorsBecomeErrorStatus) {
  const Json j = run_json({"first-witt-special", "--dim", "8"}, 2);
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["payload"]["error"], "UnsupportedDimension");
}

TEST(Run, VishikDegenerateIsNotAsserted) {
  const Json j = run_json({"motive", "vishik", "--m", "2", "--k", "1"});
  EXPECT_EQ(j["status"], "ok");
  EXPECT_TRUE(j["payload"]["holds"].is_null());
  EXPECT_EQ(j["payload"]["degenerate"], true);
}

TEST(Run, DecomposeSerializesSortedRecords) {
  const Json j = run_json({"motive", "decompose", "--variety", "quadric", "--n", "3"});
  const Json& e = j["payload"]["expression"];
  ASSERT_EQ(e.size(), 3u);
  EXPECT_EQ(e[0], Json::parse(R"({"base":"SpecL","params":[],"shift":2})"));
  EXPECT_EQ(e[1], Json::parse(R"({"base":"Nh","params":[3],"shift":0})"));
  EXPECT_EQ(j["payload"]["matches"], true);
}

TEST(Run, RostReportFields) {
  const Json j = run_json({"rost", "incompressible", "--n", "9", "--anisotropic"});
  const Json& p = j["payload"];
  for (const char* key : {"n", "dim_vh", "eta2_parity", "is_power_case", "point_gcd", "verdict"})
    EXPECT_TRUE(p.contains(key)) << key;
  EXPECT_EQ(p["verdict"], "Incompressible");
  const Json k = run_json({"rost", "incompressible", "--a", "2", "--bdiag", "1,-1"});
  EXPECT_EQ(k["payload"]["anisotropic"], false);
  EXPECT_EQ(k["payload"]["verdict"], "Unknown");
}

// Every subcommand, once; the JSON payload must survive parse + dump unchanged.
const std::vector<std::vector<std::string>> kAllCommands = {
    {"poincare", "--variety", "quadric", "--n", "5", "--at", "1"},
    {"poincare", "--variety", "projective", "--m", "3", "--point-factor", "1"},
    {"motive", "decompose", "--variety", "hermitian", "--n", "6"},
    {"motive", "decompose", "--variety", "projective", "--m", "2"},
    {"motive", "nh", "--n", "5"},
    {"motive", "nh", "--range", "2..40"},
    {"motive", "verify-krashen", "--n", "3"},
    {"motive", "vishik", "--m", "2", "--k", "3"},
    {"motive", "vishik", "--m", "1", "--range", "2..20"},
    {"rost", "eta2", "--range", "2..1000"},
    {"rost", "incompressible", "--n", "4", "--isotropic"},
    {"rost", "degree-filter", "--n", "4"},
    {"rost", "degree-filter", "--range", "2..500"},
    {"form", "trace", "--a", "5", "--bdiag", "1,-1"},
    {"form", "det", "--qdiag", "8,3/4"},
    {"form", "hilbert", "--x", "10", "--y", "-30"},
    {"form", "hasse", "--qdiag", "1,2,-3"},
    {"form", "hasse", "--qdiag", "-1,-1", "--place", "inf"},
    {"form", "witt-index", "--qdiag", "1,1,1,1,1", "--place", "3"},
    {"form", "witt-index", "--qdiag", "1,1,-1,-1"},
    {"form", "isotropic", "--a", "-1", "--bdiag", "1,1"},
    {"form", "hyperbolic-over", "--qdiag", "1,-2,1,-2", "--a", "2"},
    {"form", "check-mh", "--qdiag", "1,1,1", "--a", "-1"},
    {"essdim", "--n", "5"},
    {"essdim", "--n", "4", "--i1", "2"},
    {"first-witt-special", "--dim", "18"},
};

TEST(Json, RoundTripsByteIdentically) {
  for (auto args : kAllCommands) {
    args.push_back("--json");
    const Result r = run_cli(args);
    ASSERT_LE(r.code, 1) << args[0] << " " << r.err;
    ASSERT_FALSE(r.out.empty());
    const std::string line = r.out.substr(0, r.out.size() - 1);
    EXPECT_EQ(Json::parse(line).dump(), line);
    EXPECT_EQ(run_cli(args).out, r.out) << "non-deterministic output";
  }
}

TEST(Run, EveryCommandProducesHumanOutput) {
  for (const auto& args : kAllCommands) {
    const Result r = run_cli(args);
    EXPECT_FALSE(r.out.empty()) << args[0];
  }
}

}  // namespace
}  // namespace hermquad::cli
