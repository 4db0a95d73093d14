#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "app.hpp"

using namespace wds;
using namespace wds::app;

namespace {

struct CliRun {
  int code;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  const std::string cmd = std::string(WDS_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

Scenario small(std::size_t n = 1024) {
  Overrides o;
  o.grid = n;
  return resolve(o);
}

}  // namespace

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(kInf), "inf");
  EXPECT_EQ(format_number(-kInf), "-inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
}

TEST(Resolve, OverridesBeatFile) {
  const std::string path = write_temp("cfg1.txt", "weight = atomic\nmu.atom = 0 0 1\ngrid.n = 512\nseed = 3\n");
  Overrides o;
  o.config = path;
  o.seed = 9;
  const Scenario s = resolve(o);
  EXPECT_EQ(s.grid_n, 512u);
  EXPECT_EQ(s.seed, 9u);
  EXPECT_EQ(s.weight_name, "atomic");
  ASSERT_EQ(s.weight.mu.atoms.size(), 1u);
}

TEST(Resolve, BadGridIsConfigError) {
  Overrides o;
  o.grid = 1000;
  EXPECT_THROW(resolve(o), ConfigError);
}

TEST(Eval, GreenAtCenter) {
  Scenario s = small();
  s.weight = family::standard_alpha(0.5);
  s.points = {cplx(0.0)};
  const Output out = cmd_eval(s, "green");
  ASSERT_EQ(out.code, kOk);
  const auto l = lines(out.text);
  ASSERT_EQ(l.size(), 2u);
  EXPECT_EQ(l[0], "point,value");
  // sqrt(1 - |z|^2) for this weight.
  EXPECT_NEAR(std::stod(l[1].substr(l[1].find(',') + 1)), 1.0, 1e-12);
}

TEST(Eval, UnknownQuantityRejected) {
  EXPECT_THROW(cmd_eval(small(), "nonsense"), ConfigError);
}

TEST(Dirichlet, RoutesTable) {
  Scenario s = small(4096);
  s.function = "monomial 2";
  const Output out = cmd_dirichlet(s);
  ASSERT_EQ(out.code, kOk);
  const auto l = lines(out.text);
  EXPECT_EQ(l[0], "route,value,gap_area,gap_local,gap_entropy,gap_douglas");
  ASSERT_EQ(l.size(), 5u);
  EXPECT_EQ(l[1].rfind("area,2,", 0), 0u) << l[1];
}

TEST(Capacity, CircleAndEmptyRows) {
  Scenario s = small(256);
  s.set = "circle";
  auto capacity_of = [&](const std::string& set) {
    s.set = set;
    const auto l = lines(cmd_capacity(s, {}).text);
    EXPECT_EQ(l.size(), 2u);
    return std::stod(l.at(1).substr(2));
  };
  EXPECT_NEAR(capacity_of("circle"), 1.0, 1e-12);
  EXPECT_EQ(capacity_of("empty"), 0.0);
}

TEST(Capacity, SweepWithPartialSums) {
  Scenario s = small(512);
  s.set = "point 0";
  s.weight = family::atomic({{0.0, 1.0}});
  CapacityArgs a;
  a.source = "arc";
  a.levels = 10;
  a.condition_c = true;
  const auto l = lines(cmd_capacity(s, a).text);
  EXPECT_EQ(l[0], "t,capacity,iterations,kkt_residual,converged,partial_sum");
  EXPECT_EQ(l.size(), 12u);
}

TEST(Cyclicity, DistanceCurveCsv) {
  Scenario s = small(512);
  s.function = "constant 1";
  CyclicityArgs a;
  a.degree = 8;
  const Output out = cmd_cyclicity(s, a);
  ASSERT_EQ(out.code, kOk);
  const auto l = lines(out.text);
  EXPECT_EQ(l[0], "k,d");
  EXPECT_EQ(l.size(), 10u);
}

TEST(Cyclicity, JsonModes) {
  Scenario s = small(512);
  s.set = "points 0 2";
  CyclicityArgs a;
  a.mode = "dalpha";
  const Json j = Json::parse(cmd_cyclicity(s, a).text);
  EXPECT_EQ(j.at("verdict"), "cyclic");
}

TEST(Verify, ReportShapeAndExit) {
  Scenario s = small(1024);
  s.trials = 2;
  const Output out = cmd_verify(s, "bregman", "verify bregman", "");
  const Json j = Json::parse(out.text);
  for (const char* key : {"command", "config_digest", "seed", "trials", "tolerances", "suites", "passed", "failed"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(out.code, j.at("failed").get<int>() == 0 ? kOk : kViolation);
  EXPECT_THROW(cmd_verify(s, "nonsense", "", ""), ConfigError);
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_cli("--help").code, 0);
  EXPECT_EQ(run_cli("--grid 1000 dirichlet").code, kConfigError);
  EXPECT_EQ(run_cli("--config /nonexistent/cfg dirichlet").code, kConfigError);
  EXPECT_EQ(run_cli("frobnicate").code, kConfigError);
  const std::string bad = write_temp("bad.txt", "weight = classical\nmu.atom = 1.5 0 1\n");
  const CliRun r = run_cli("--config " + bad + " dirichlet");
  EXPECT_EQ(r.code, kConfigError);
  EXPECT_NE(r.out.find("mu.atom"), std::string::npos) << r.out;
}

TEST(Binary, EvalMatchesLibrary) {
  const std::string cfg = write_temp("at.txt", "weight = atomic\nmu.atom = 0.5 0 1\ngrid.n = 1024\n");
  const CliRun r = run_cli("--config " + cfg + " --points \"0 0\" eval green");
  ASSERT_EQ(r.code, 0) << r.out;
  // log(1 / |a|^2) for a unit atom at a = 0.5.
  EXPECT_NE(r.out.find("1.38629436111989"), std::string::npos) << r.out;
}

TEST(Binary, OutputIsDeterministic) {
  const std::string cfg = write_temp("det.txt", "weight = atomic\nmu.atom = 0 0 1\ngrid.n = 512\nseed = 5\ntrials = 2\n");
  const std::string path = ::testing::TempDir() + "det.json";
  auto report = [&](const std::string& extra) {
    EXPECT_LE(run_cli("--config " + cfg + extra + " --out " + path + " verify cyclicity").code, 1);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  const std::string first = report(""), second = report("");
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, second);
  // Worker count changes only the echoed command.
  Json a = Json::parse(first), b = Json::parse(report(" --workers 3"));
  a.erase("command");
  b.erase("command");
  EXPECT_EQ(a.dump(), b.dump());
}
