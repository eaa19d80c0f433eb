#include "leibrack/algebra_file.hpp"
#include "leibrack/corpus.hpp"
#include "leibrack/report.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace leibrack;

namespace {

const std::string data_dir = LEIBRACK_DATA_DIR;
const std::string cli = LEIBRACK_CLI;

std::string data(const std::string &name) { return data_dir + "/" + name; }

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string &args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

SuiteConfig quick() {
  SuiteConfig cfg;
  cfg.samples = 20;
  cfg.slow_samples = 5;
  return cfg;
}

} // namespace

TEST(ParseAlgebra, ShippedFiles) {
  EXPECT_EQ(parse_algebra_file(data("dim5.leib")), dim5_algebra());
  EXPECT_EQ(parse_algebra_file(data("heisenberg.leib")), heisenberg_algebra());
  EXPECT_EQ(parse_algebra_file(data("abelian3.leib")), abelian3_algebra());
}

TEST(ParseAlgebra, CorruptedNamesTriple) {
  try {
    parse_algebra_file(data("corrupted.leib"));
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_EQ(e.triple(), (std::array<std::size_t, 3>{0, 0, 0}));
    EXPECT_NE(std::string(e.what()).find("(e1, e1, e1)"), std::string::npos);
  }
}

TEST(ParseAlgebra, EmptyBracketsIsAbelian) {
  const auto alg = parse_algebra_text(R"({"dim": 3, "brackets": []})");
  EXPECT_EQ(alg, LeibnizAlgebra::abelian(3));
  EXPECT_EQ(alg.basis_names(), (std::vector<std::string>{"e1", "e2", "e3"}));
}

TEST(ParseAlgebra, RationalCoefficients) {
  const auto alg = parse_algebra_text(
      R"({"dim": 2, "brackets": [{"left": 0, "right": 0, "value": {"1": "-3/4"}}]})");
  EXPECT_EQ(alg.structure_constant(0, 0, 1), Rational(-3, 4));
}

TEST(ParseAlgebra, MalformedInputs) {
  const char *bad[] = {
      "not json",
      R"({"brackets": []})",
      R"({"dim": -1, "brackets": []})",
      R"({"dim": 2})",
      R"({"dim": 2, "brackets": [], "extra": 1})",
      R"({"dim": 2, "brackets": [{"left": 2, "right": 0, "value": {}}]})",
      R"({"dim": 2, "brackets": [{"left": 0, "right": 0, "value": {"5": 1}}]})",
      R"({"dim": 2, "brackets": [{"left": 0, "right": 0, "value": {"1": "1/0"}}]})",
      R"({"dim": 2, "brackets": [{"left": 0, "right": 0, "value": {"1": 0.5}}]})",
      R"({"dim": 2, "brackets": [{"left": 0, "right": 0, "value": {}}, {"left": 0, "right": 0, "value": {}}]})",
      R"({"dim": 2, "basis": ["a"], "brackets": []})",
      R"({"dim": 2, "basis": ["a", "a"], "brackets": []})",
  };
  for (const char *text : bad)
    EXPECT_THROW(parse_algebra_text(text), ParseError) << text;
  EXPECT_THROW(parse_algebra_file(data("missing.leib")), ParseError);
}

TEST(SerializeAlgebra, RoundTrip) {
  std::vector<LeibnizAlgebra> algebras{dim5_algebra(), heisenberg_algebra(), abelian3_algebra()};
  for (std::uint64_t s = 0; s < 10; ++s)
    algebras.push_back(random_nilpotent_leibniz(s));
  for (const auto &alg : algebras) {
    const std::string text = serialize_algebra(alg);
    const auto back = parse_algebra_text(text);
    EXPECT_EQ(back, alg);
    EXPECT_EQ(back.basis_names(), alg.basis_names());
    EXPECT_EQ(serialize_algebra(back), text);
  }
}

TEST(Commands, VerifyDim5) {
  const auto r = cmd_verify(data("dim5.leib"));
  EXPECT_EQ(r.exit_code, exit_pass);
  EXPECT_FALSE(r.report["structure"]["is_lie"].get<bool>());
  const auto basis = r.report["structure"]["left_center"]["basis"];
  ASSERT_EQ(basis.size(), 3u);
  EXPECT_EQ(basis[0], Json({"0", "0", "1", "0", "0"}));
  EXPECT_EQ(basis[2], Json({"0", "0", "0", "0", "1"}));
}

TEST(Commands, VerifyHeisenbergAndCorrupted) {
  const auto h = cmd_verify(data("heisenberg.leib"));
  EXPECT_EQ(h.exit_code, exit_pass);
  EXPECT_TRUE(h.report["structure"]["is_lie"].get<bool>());
  const auto bad = cmd_verify(data("corrupted.leib"));
  EXPECT_EQ(bad.exit_code, exit_validation);
  EXPECT_EQ(bad.report["error"]["kind"], "ValidationError");
  EXPECT_EQ(bad.report["error"]["defect"], Json({"-1", "0"}));
}

TEST(Commands, AnalyzeDim5) {
  const auto r = cmd_analyze(data("dim5.leib"));
  EXPECT_EQ(r.exit_code, exit_pass);
  const auto &ext = r.report["extension"];
  EXPECT_EQ(ext["g0_dim"], 2);
  EXPECT_EQ(ext["rho"][0]["matrix"]["exact"], Json::parse(R"([["0","0","0"],["1","0","0"],["0","1","0"]])"));
  EXPECT_EQ(ext["rho"][1]["matrix"]["exact"], Json::parse(R"([["0","0","0"],["0","0","0"],["1","0","0"]])"));
  EXPECT_EQ(ext["omega"][1]["value"]["exact"], Json({"1", "0", "0"}));
  EXPECT_EQ(ext["omega"][2]["value"]["exact"], Json({"0", "1", "0"}));
  EXPECT_TRUE(ext["cocycle"]["closed"].get<bool>());
}

TEST(Commands, AnalyzeAbelianAndHeisenberg) {
  EXPECT_EQ(cmd_analyze(data("abelian3.leib")).report["extension"]["g0_dim"], 0);
  const auto h = cmd_analyze(data("heisenberg.leib")).report["extension"];
  EXPECT_EQ(h["omega"][1]["value"]["exact"], Json({"1"}));
  EXPECT_EQ(h["omega"][2]["value"]["exact"], Json({"-1"}));
}

TEST(Commands, IntegrateReportsDefectsWithTolerances) {
  const auto r = cmd_integrate(data("dim5.leib"), quick());
  EXPECT_EQ(r.exit_code, exit_pass);
  for (const auto &p : r.report["suite"]["properties"]) {
    EXPECT_TRUE(p.contains("defect"));
    EXPECT_TRUE(p.contains("tolerance"));
  }
  const auto ref = r.report["suite"]["reference_i2"]["value"];
  EXPECT_NEAR(ref[2].get<double>(), 7.0 / 12.0, 1e-9);
  EXPECT_EQ(r.report["config"]["quad_order"], 8);
  EXPECT_EQ(r.report["config"]["seed"], 0);
}

TEST(Commands, IntegrateHeisenbergRunsLieSuite) {
  const auto r = cmd_integrate(data("heisenberg.leib"), quick());
  EXPECT_EQ(r.exit_code, exit_pass);
  EXPECT_TRUE(r.report["suite"]["lie_specialization"].get<bool>());
  bool found = false;
  for (const auto &p : r.report["suite"]["properties"])
    found = found || p["name"] == "lie_iota_relation";
  EXPECT_TRUE(found);
}

TEST(Commands, ExampleChecks) {
  const auto d = cmd_example("dim5", quick());
  EXPECT_EQ(d.exit_code, exit_pass);
  EXPECT_TRUE(d.report["closed_form"]["conjugation_formula"]["passed"].get<bool>());
  EXPECT_TRUE(d.report["closed_form"]["phi_typo"].contains("note"));
  EXPECT_EQ(cmd_example("heisenberg", quick()).exit_code, exit_pass);
  EXPECT_EQ(cmd_example("abelian3", quick()).exit_code, exit_pass);
  EXPECT_THROW(cmd_example("nope", quick()), std::invalid_argument);
}

TEST(Commands, ReportsAreDeterministic) {
  EXPECT_EQ(cmd_integrate(data("dim5.leib"), quick()).report.dump(),
            cmd_integrate(data("dim5.leib"), quick()).report.dump());
  SuiteConfig other = quick();
  other.seed = 1;
  EXPECT_NE(cmd_integrate(data("dim5.leib"), quick()).report.dump(),
            cmd_integrate(data("dim5.leib"), other).report.dump());
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run("verify " + data("dim5.leib")).status, 0);
  EXPECT_EQ(run("verify " + data("corrupted.leib")).status, 2);
  EXPECT_EQ(run("analyze " + data("heisenberg.leib")).status, 0);
  EXPECT_EQ(run("integrate " + data("abelian3.leib") + " --samples 10").status, 0);
  EXPECT_EQ(run("integrate " + data("corrupted.leib")).status, 2);
  EXPECT_NE(run("example nope").status, 0);
  EXPECT_NE(run("integrate " + data("dim5.leib") + " --fd-step 0.5").status, 0);
}

TEST(Binary, ByteIdenticalJson) {
  const std::string args = "integrate " + data("dim5.leib") + " --samples 15 --seed 3 --json";
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_EQ(a.status, 0);
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["config"]["samples"], 15);
  EXPECT_EQ(j["config"]["seed"], 3);
}
