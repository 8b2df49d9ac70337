#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CliRun {
  int status;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(TBT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

const std::string kCode = std::string("--code ") + TBT_DATA + "/g1h1.json";
const std::string kZ = "--received '111 110 110 111 000'";

TEST(Cli, Syndrome) {
  const CliRun r = run("syndrome " + kCode + " " + kZ);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "sigma_fin=(0,0)\nzeta=00 00 10 01 11\n");
}

TEST(Cli, BackwardSyndrome) {
  const CliRun r = run("syndrome --backward " + kCode + " " + kZ);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "sigma_fin=(0,0)\neta=00 11 01 10 00\n");
}

TEST(Cli, Decode) {
  const CliRun r = run("decode " + kCode + " " + kZ);
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("weight=2"), std::string::npos);
  EXPECT_NE(r.out.find("y=111 110 010 011 000"), std::string::npos);
}

TEST(Cli, DecodeTie) {
  const CliRun r = run("decode " + kCode + " --received '000 000 000 000 111'");
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("weight=3"), std::string::npos);
}

TEST(Cli, TrellisExports) {
  CliRun r = run("code-trellis " + kCode + " -N 5 --highlight '(1,0)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("digraph trellis {", 0), 0U);
  EXPECT_NE(r.out.find("style=bold"), std::string::npos);

  r = run("error-trellis " + kCode + " " + kZ + " --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.front(), '{');

  r = run("backward-error-trellis " + kCode + " " + kZ);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("digraph trellis {", 0), 0U);
}

TEST(Cli, HScalar) {
  const CliRun r = run("hscalar " + kCode + " -N 5");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("size 10x15 rank 10"), std::string::npos);
}

TEST(Cli, Verify) {
  CliRun r = run("verify " + kCode + " -N 5 --samples 200");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  r = run("verify " + kCode + " -N 1 --samples 50");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(run("verify " + kCode + " -N 0").status, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("syndrome").status, 1);
  EXPECT_EQ(run("syndrome " + kCode + " --received 1111").status, 1);
  EXPECT_EQ(run("syndrome --code /nonexistent.json " + kZ).status, 1);
  EXPECT_EQ(run("hscalar " + kCode + " -N 0").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

}  // namespace
