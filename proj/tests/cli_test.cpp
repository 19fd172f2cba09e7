#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string output;  // stdout and stderr
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + QSEAL_CLI_PATH + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qseal_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(Cli, SealIsByteReproducible) {
  const auto a = run("--seed 7 seal --allow-weak --message 1 -n 9 -k 3 --public " + path("a.pub") + " --secret " + path("a.sec"));
  const auto b = run("--seed 7 seal --allow-weak --message 1 -n 9 -k 3 --public " + path("b.pub") + " --secret " + path("b.sec"));
  ASSERT_EQ(a.code, 0) << a.output;
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(slurp(path("a.pub")), slurp(path("b.pub")));
  EXPECT_EQ(slurp(path("a.sec")), slurp(path("b.sec")));
  EXPECT_NE(a.output.find("n0="), std::string::npos);
  // (9, 3) misses the n0 threshold, so it only seals when forced.
  EXPECT_EQ(run("seal --message 1 -n 9 -k 3 --public " + path("c.pub") + " --secret " + path("c.sec")).code, 2);
}

TEST_F(Cli, RejectsWeakAndInvalidParams) {
  const auto weak = run("seal --message 1 -n 8 -k 3 --public " + path("p") + " --secret " + path("s"));
  EXPECT_EQ(weak.code, 2);
  EXPECT_NE(weak.output.find("n0"), std::string::npos) << weak.output;
  EXPECT_FALSE(fs::exists(path("p")));
  EXPECT_EQ(run("seal --allow-weak --message 1 -n 8 -k 3 --public " + path("p") + " --secret " + path("s")).code, 0);

  const auto half = run("seal --message 1 -n 9 -k 5 --public " + path("p") + " --secret " + path("s"));
  EXPECT_EQ(half.code, 2);
  EXPECT_NE(half.output.find("1/2"), std::string::npos) << half.output;
}

TEST_F(Cli, ReadCollapsesAndVerifyDetects) {
  const std::string files = " --public " + path("m.pub") + " --secret " + path("m.sec");
  ASSERT_EQ(run("--seed 3 seal --message 10110010 -n 25 -k 9" + files).code, 0);
  EXPECT_EQ(run("verify --public " + path("m.pub") + " --secret " + path("m.sec") + " --dry-run").code, 0);

  const auto first = run("--seed 4 read --public " + path("m.pub"));
  ASSERT_EQ(first.code, 0) << first.output;
  const auto second = run("--seed 99 read --public " + path("m.pub"));
  EXPECT_EQ(first.output, second.output);
  EXPECT_NE(first.output.find("message: "), std::string::npos);

  // Eight registers with r = 6 all pass only with probability 2^-48.
  const auto verdict = run("verify -r 6 --public " + path("m.pub") + " --secret " + path("m.sec"));
  EXPECT_EQ(verdict.code, 3) << verdict.output;
  EXPECT_NE(verdict.output.find("broken"), std::string::npos);
}

TEST_F(Cli, DryRunLeavesThePublicFileAlone) {
  ASSERT_EQ(run("seal --allow-weak --message 1 -n 9 -k 3 --public " + path("d.pub") + " --secret " + path("d.sec")).code, 0);
  const std::string before = slurp(path("d.pub"));
  EXPECT_EQ(run("read --dry-run --public " + path("d.pub")).code, 0);
  EXPECT_EQ(slurp(path("d.pub")), before);
  EXPECT_TRUE(fs::exists(path("d.pub.dry-run")));
}

TEST_F(Cli, CredentialsFlow) {
  ASSERT_EQ(run("seal --message 11 -n 20 -k 6 --public " + path("c.pub") + " --secret " + path("c.sec")).code, 0);
  EXPECT_EQ(run("issue-credentials --sizes 4,0 --secret " + path("c.sec") + " -o " + path("c.cred")).code, 2);
  EXPECT_EQ(run("issue-credentials --sizes 7,7 --secret " + path("c.sec") + " -o " + path("c.cred")).code, 2);
  ASSERT_EQ(run("issue-credentials --sizes 4,4,4 --secret " + path("c.sec") + " -o " + path("c.cred")).code, 0);
  const std::string v = " --public " + path("c.pub") + " --credentials " + path("c.cred");
  EXPECT_EQ(run("verify --dry-run --verifier v2" + v).code, 0);
  EXPECT_EQ(run("verify --verifier nobody" + v).code, 2);
}

TEST_F(Cli, AttackShowsPredictionsAndRejectsZeroTrials) {
  const auto single = run("--seed 5 --trials 200000 attack --strategy single -n 10 -k 4 --check");
  EXPECT_EQ(single.code, 0) << single.output;
  EXPECT_NE(single.output.find("11/20"), std::string::npos);
  const auto full = run("--seed 5 --trials 20000 --format csv attack --strategy full -n 25 -k 9 --mode r -r 4");
  EXPECT_EQ(full.code, 0);
  EXPECT_NE(full.output.find("15/16"), std::string::npos);
  EXPECT_EQ(run("--trials 0 attack -n 10 -k 4").code, 2);
}

TEST_F(Cli, AttackIsIndependentOfThreadCount) {
  const auto one = run("--seed 8 --trials 30000 --threads 1 attack --strategy full -n 9 -k 3 --mode r -r 2");
  const auto four = run("--seed 8 --trials 30000 --threads 4 attack --strategy full -n 9 -k 3 --mode r -r 2");
  EXPECT_EQ(one.output, four.output);
}

TEST_F(Cli, AnalyzeSweepWithOracle) {
  const auto r = run("analyze --n-min 2 --n-max 10 --oracle -o " + path("sweep.csv"));
  EXPECT_EQ(r.code, 0) << r.output;
  const std::string csv = slurp(path("sweep.csv"));
  EXPECT_EQ(csv.rfind("n,k,d2_formula,d2_formula_float,d2_oracle,bound,bound_satisfied\n", 0), 0U);
  EXPECT_NE(csv.find("\n2,1,1/2,0.5,"), std::string::npos) << csv;
  EXPECT_EQ(csv.find("false"), std::string::npos);

  const auto formula_only = run("--format csv analyze --n-min 38 --n-max 40 --k-rule all");
  EXPECT_EQ(formula_only.code, 0);
  EXPECT_NE(formula_only.output.find("\n40,20,"), std::string::npos);
}

TEST_F(Cli, OracleCapComesFromTheEnvironment) {
  EXPECT_EQ(run("analyze --n-min 5 --n-max 6 --oracle", "QSEAL_ORACLE_CAP=4").code, 2);
  EXPECT_EQ(run("analyze --n-min 5 --n-max 6 --oracle", "QSEAL_ORACLE_CAP=6").code, 0);
}

TEST_F(Cli, QuantumPipeline) {
  const std::string files = " --public " + path("q.pub") + " --secret " + path("q.sec");
  ASSERT_EQ(run("--seed 11 qseal --qubits 2 -n 25 -k 9 -s 2" + files).code, 0);
  EXPECT_EQ(run("qverify" + files + " --dry-run").code, 0);
  const auto read = run("--seed 12 qread" + files);
  EXPECT_EQ(read.code, 0) << read.output;
  EXPECT_NE(read.output.find("fidelity with sealed state: 1.0000000"), std::string::npos);
  EXPECT_EQ(run("qverify -r 8" + files).code, 3);
  EXPECT_EQ(run("read --public " + path("q.pub")).code, 1);
}

}  // namespace
