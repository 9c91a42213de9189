#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace lauricella::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "lauricella");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  Outcome o;
  std::ostringstream out, err;
  RunConfig cfg;
  if (auto code = parse_args(static_cast<int>(argv.size()), argv.data(), cfg, out, err)) {
    o.code = *code;
  } else {
    o.code = run(cfg, out, err);
  }
  o.out = out.str();
  o.err = err.str();
  return o;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lauricella_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    unsetenv(kPrecisionEnv);
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv(kPrecisionEnv);
  }
  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  fs::path dir_;
};

TEST_F(CliTest, VerifyPassesWithExitZero) {
  const Outcome o = invoke({"--m", "2", "--mode", "verify", "--samples", "2"});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  EXPECT_NE(o.out.find("\"passed\": true"), std::string::npos);
  EXPECT_TRUE(o.err.empty());
}

TEST_F(CliTest, VerifyIsDeterministic) {
  const Outcome a = invoke({"--m", "3", "--mode", "verify", "--seed", "9"});
  const Outcome b = invoke({"--m", "3", "--mode", "verify", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, kExitPass);
}

TEST_F(CliTest, InjectedDeterminantFaultFailsWithWitness) {
  RunConfig cfg;
  cfg.m = 2;
  cfg.seed = 4;
  cfg.faults.det_sign_flip = true;
  std::ostringstream out, err;
  EXPECT_EQ(run(cfg, out, err), kExitVerificationFailure);
  EXPECT_NE(err.str().find("FAIL"), std::string::npos);
  EXPECT_NE(err.str().find("seed 4"), std::string::npos) << err.str();
  EXPECT_NE(err.str().find("det Lambda0"), std::string::npos);
  EXPECT_NE(out.str().find("\"passed\": false"), std::string::npos);
}

TEST_F(CliTest, ConfigErrorsExitTwo) {
  EXPECT_EQ(invoke({"--mode", "bogus"}).code, kExitConfigError);
  EXPECT_EQ(invoke({"--format", "yaml"}).code, kExitConfigError);
  EXPECT_EQ(invoke({"--m", "0"}).code, kExitConfigError);
  EXPECT_EQ(invoke({"--mode", "verify", "--format", "csv"}).code, kExitConfigError);
  EXPECT_EQ(invoke({"--mode", "matrices", "--params", (dir_ / "missing.json").string()}).code,
            kExitConfigError);
  const std::string bad = write("bad.json", "{ not json");
  EXPECT_EQ(invoke({"--mode", "det", "--params", bad}).code, kExitConfigError);
  const std::string wrong_m = write("m3.json", R"({"alpha": "2", "beta": "3", "gamma": ["5", "7", "11"]})");
  EXPECT_EQ(invoke({"--m", "2", "--mode", "det", "--params", wrong_m}).code, kExitConfigError);
  EXPECT_EQ(invoke({"--mode", "series"}).code, kExitConfigError);
}

TEST_F(CliTest, NonGenericPointExitsThree) {
  const std::string f = write("g1.json", R"({"alpha": "2", "beta": "3", "gamma": ["1", "7"]})");
  for (const char* mode : {"matrices", "verify", "det"}) {
    const Outcome o = invoke({"--m", "2", "--mode", mode, "--params", f});
    EXPECT_EQ(o.code, kExitNonGeneric) << mode;
    EXPECT_NE(o.err.find("G1"), std::string::npos) << o.err;
  }
}

TEST_F(CliTest, SeriesDomainErrorExitsFour) {
  const std::string f = write("far.json", R"({"a": "1/3", "b": "1/5", "c": ["1/7"], "x": ["2"]})");
  EXPECT_EQ(invoke({"--m", "1", "--mode", "series", "--params", f}).code, kExitDomainError);
  const std::string pole = write("pole.json", R"({"a": "1/3", "b": "1/5", "c": ["-2"], "x": ["1/10"]})");
  EXPECT_EQ(invoke({"--m", "1", "--mode", "series", "--params", pole}).code, kExitDomainError);
}

TEST_F(CliTest, SeriesOutput) {
  const std::string f = write("ok.json", R"({"a": "1", "b": "1", "c": ["2"], "x": ["1/10"]})");
  const Outcome o = invoke({"--m", "1", "--mode", "series", "--params", f, "--order", "60"});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  EXPECT_NE(o.out.find("1.053605156578263012275009808393"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("\"f_I\""), std::string::npos);
  EXPECT_NE(o.out.find("\"coefficients\""), std::string::npos);
}

TEST_F(CliTest, DetModeReportsBothValues) {
  const std::string f = write("p.json", R"({"alpha": "2", "beta": "3", "gamma": ["5", "7"]})");
  const Outcome o = invoke({"--m", "2", "--mode", "det", "--params", f});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  EXPECT_NE(o.out.find("\"det_lambda0\": \"-41/152064\""), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("\"closed_form\": \"-41/152064\""), std::string::npos);
}

TEST_F(CliTest, MatricesFormats) {
  const Outcome json = invoke({"--m", "2", "--mode", "matrices"});
  EXPECT_EQ(json.code, kExitPass);
  EXPECT_NE(json.out.find("\"basis_order\""), std::string::npos);
  EXPECT_NE(json.out.find("\"M'_2\""), std::string::npos);
  const Outcome tex = invoke({"--m", "2", "--mode", "matrices", "--format", "latex"});
  EXPECT_NE(tex.out.find("\\begin{pmatrix}"), std::string::npos);
  const Outcome csv = invoke({"--m", "2", "--mode", "matrices", "--format", "csv", "--precision", "64"});
  EXPECT_NE(csv.out.find("# M_0"), std::string::npos);
}

TEST_F(CliTest, OutputFile) {
  const std::string path = (dir_ / "out.json").string();
  const Outcome o = invoke({"--m", "1", "--mode", "sample-params", "--samples", "3", "--out", path});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("\"seed\": 3"), std::string::npos);
}

TEST_F(CliTest, PrecisionFromEnvironment) {
  setenv(kPrecisionEnv, "96", 1);
  RunConfig cfg;
  std::ostringstream out, err;
  const char* argv[] = {"lauricella"};
  EXPECT_FALSE(parse_args(1, argv, cfg, out, err).has_value());
  EXPECT_EQ(cfg.precision, 96);
  const char* argv2[] = {"lauricella", "--precision", "300"};
  EXPECT_FALSE(parse_args(3, argv2, cfg, out, err).has_value());
  EXPECT_EQ(cfg.precision, 300);
  setenv(kPrecisionEnv, "abc", 1);
  EXPECT_EQ(parse_args(1, argv, cfg, out, err), std::optional<int>(kExitConfigError));
}

TEST_F(CliTest, HelpExitsZero) {
  const Outcome o = invoke({"--help"});
  EXPECT_EQ(o.code, kExitPass);
  EXPECT_NE(o.out.find("--mode"), std::string::npos);
}

TEST_F(CliTest, ExecutableExitCodes) {
  const std::string tool = LAURICELLA_TOOL_PATH;
  auto status = [&](const std::string& args) {
    const int raw = std::system((tool + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("--m 2 --mode verify"), 0);
  EXPECT_EQ(status("--mode nope"), 2);
  const std::string f = write("g.json", R"({"alpha": "2", "beta": "3", "gamma": ["1", "7"]})");
  EXPECT_EQ(status("--m 2 --mode det --params " + f), 3);
}

TEST_F(CliTest, TenSamplesAtThreeVariablesPass) {
  const Outcome o = invoke({"--m", "3", "--mode", "verify", "--samples", "10"});
  EXPECT_EQ(o.code, kExitPass) << o.err;
}

TEST_F(CliTest, ZeroSamplesIsAConfigError) {
  EXPECT_EQ(invoke({"--m", "2", "--mode", "verify", "--samples", "0"}).code, kExitConfigError);
}

TEST_F(CliTest, SeriesAtOriginIsOne) {
  const std::string f = write("zero.json", R"({"a": "1/3", "b": "1/5", "c": ["1/7", "2/9"], "x": ["0", "0"]})");
  const Outcome o = invoke({"--m", "2", "--mode", "series", "--params", f});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  EXPECT_NE(o.out.find("\"value\": \"1e0+0*i@256\""), std::string::npos) << o.out;
}

TEST_F(CliTest, LatexLayoutOfPrimeMatrices) {
  const std::string f = write("p.json", R"({"alpha": "2", "beta": "3", "gamma": ["5", "7"]})");
  const Outcome o = invoke({"--m", "2", "--mode", "matrices", "--format", "latex", "--params", f});
  EXPECT_EQ(o.code, kExitPass) << o.err;
  // M'_1 at gamma_1 = 5: rows (1 1 0 0), (0 1/5 0 0), (0 0 1 1), (0 0 0 1/5).
  const auto at = o.out.find("M'_1 = \\begin{pmatrix}");
  ASSERT_NE(at, std::string::npos) << o.out;
  const std::string block = o.out.substr(at, o.out.find("\\end{pmatrix}", at) - at);
  EXPECT_NE(block.find("1 & 1 & 0 & 0"), std::string::npos) << block;
  EXPECT_NE(block.find("0 & \\frac{1}{5} & 0 & 0"), std::string::npos) << block;
}

}  // namespace
}  // namespace lauricella::cli
