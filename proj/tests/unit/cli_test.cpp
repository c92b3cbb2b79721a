#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = nvf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / ("nodalvf_cli_" + name);
  std::ofstream(p) << text;
  return p.string();
}

const char* kLine = R"({"components":[{"id":0,"field":["0","-5","-1"]}],"nodes":[],
  "p_infty":{"comp":0,"at":"0"},"markings":[{"comp":0,"at":"1"}]})";

}  // namespace

TEST(Cli, HopfVerify) {
  EXPECT_EQ(run({"hopf", "verify"}).code, 0);
  for (const char* m : {"drop-t", "naive-antipode", "shifted-counit"}) {
    Result r = run({"hopf", "verify", "--mutant", m});
    EXPECT_EQ(r.code, 1) << m;
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  }
  EXPECT_EQ(run({"hopf", "verify", "--mutant", "bogus"}).code, 1);
  EXPECT_EQ(run({"hopf", "law", "--a", "2", "--b", "3", "--tau", "1"}).out, "11\n");
}

TEST(Cli, CurveCommands) {
  std::string path = write_temp("line.json", kLine);
  Result r = run({"curve", "ncr", "--in", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "5\n");
  EXPECT_EQ(run({"curve", "validate", "--in", path}).code, 0);
  EXPECT_EQ(run({"curve", "check", "--in", path, "--kind", "C2", "--x", "0:inf"}).code, 0);
  EXPECT_EQ(run({"curve", "check", "--in", path, "--kind", "Pn"}).code, 1);
  Result s = run({"curve", "stabilize", "--in", path, "--x", "0:0"});
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_NE(s.out.find("\"contraction\""), std::string::npos);
  EXPECT_EQ(run({"curve", "ncr", "--in", "/nonexistent.json"}).code, 1);
}

TEST(Cli, Strata) {
  EXPECT_EQ(run({"strata", "--family", "lm", "--n", "3", "--count"}).out, "13\n");
  EXPECT_EQ(run({"strata", "--family", "pn", "--n", "2", "--count"}).out, "2\n");
  EXPECT_EQ(run({"strata", "--family", "pn", "--n", "9", "--count"}).code, 1);
  Result d = run({"strata", "--family", "pn", "--n", "3", "--poset", "--dot"});
  EXPECT_NE(d.out.find("digraph"), std::string::npos);
}

TEST(Cli, Limit) {
  std::string path = write_temp("fam.json", R"({"mode":"affine","params":["t"],
    "paths":[{"terms":[{"exp":[0],"coeff":"1"}]},{"terms":[{"exp":[-1],"coeff":"1"}]}]})");
  Result r = run({"limit", "--in", path});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("[{1},{2}]"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"nope"}).code, 1);
}

TEST(Cli, SpecializeIsByteIdenticalAcrossJobs) {
  std::vector<std::string> base{"specialize", "--lm", "1|23", "--lm", "2|1|3", "--grid", "a=1,2;b=0,1;c=0", "--report", "json"};
  Result one = run(base);
  auto more = base;
  more.insert(more.end(), {"--jobs", "3"});
  Result three = run(more);
  EXPECT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(one.out, run(base).out);
}
