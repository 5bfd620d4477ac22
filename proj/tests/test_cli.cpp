#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpath/sweep.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

using namespace latpath;

namespace {

std::string readFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int runCli(const std::string& args) {
  const char* exe = std::getenv("LATPATH_CLI");
  REQUIRE(exe != nullptr);
  return std::system((std::string(exe) + " " + args + " >/dev/null 2>&1").c_str());
}

const char* kStepsFile = "cli_steps.json";

void writeStepsFile() {
  std::ofstream f(kStepsFile);
  f << R"({"dim":1,"steps":[{"coords":[0],"weight":1},)"
    << R"({"coords":[1],"weight":2},{"coords":[2],"weight":1}]})";
}

}  // namespace

TEST_CASE("compare sweep on a step-set file") {
  writeStepsFile();
  SweepSpec spec;
  spec.source.stepsFile = kStepsFile;
  spec.nList = {8, 16, 32};
  spec.ray = {{IntVec{1}, IntVec{0}}};
  spec.estimators = {"exact", "SD"};
  spec.outPath = "cli_sd.csv";
  CHECK(runCompare(spec) == 0);

  std::string text = readFile(spec.outPath);
  CHECK(text.find("# latpath compare") != std::string::npos);
  CHECK(text.find("N,g0,regime,support_flag,log_exact,log_SD,ratio_SD") !=
        std::string::npos);
  CHECK(text.find("\n8,8,") != std::string::npos);

  // determinism: byte-identical on a rerun
  SweepSpec again = spec;
  again.outPath = "cli_sd2.csv";
  CHECK(runCompare(again) == 0);
  CHECK(readFile(spec.outPath) == readFile(again.outPath));
  std::remove("cli_sd.csv");
  std::remove("cli_sd2.csv");
}

TEST_CASE("grid sweep keeps only admissible targets") {
  SweepSpec spec;
  spec.source.group = "A1";
  spec.source.lambda = {1};
  spec.nList = {64};
  spec.gridRadius = 1.0;
  spec.estimators = {"exact", "CL"};
  spec.outPath = "cli_grid.csv";
  CHECK(runCompare(spec) == 0);
  std::string text = readFile(spec.outPath);
  std::istringstream lines(text);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("N,", 0) == 0) continue;
    ++rows;
    // gamma column must be even (support congruence for steps {0,-2})
    auto p1 = line.find(','), p2 = line.find(',', p1 + 1);
    long long g = std::stoll(line.substr(p1 + 1, p2 - p1 - 1));
    CHECK(g % 2 == 0);
    CHECK(line.find("true") != std::string::npos);
  }
  CHECK(rows > 0);
  std::remove("cli_grid.csv");
}

TEST_CASE("explicit targets with support violations get empty fields") {
  SweepSpec spec;
  spec.source.group = "A1";
  spec.source.lambda = {1};
  spec.nList = {16};
  spec.targets = {{-16}, {-15}};
  spec.estimators = {"exact", "CL"};
  spec.outPath = "cli_targets.csv";
  CHECK(runCompare(spec) == 0);
  std::string text = readFile(spec.outPath);
  CHECK(text.find("16,-16,CL,true,") != std::string::npos);
  CHECK(text.find("16,-15,CL,false,,,") != std::string::npos);
  std::remove("cli_targets.csv");
}

TEST_CASE("irreducible sweep") {
  SweepSpec spec;
  spec.source.group = "U2";
  spec.source.lambda = {3, 0};
  spec.nList = {10, 20};
  spec.targets = {{2, 1}};
  spec.estimators = {"exact", "irredSD"};
  spec.outPath = "cli_irred.csv";
  CHECK(runCompare(spec) == 0);
  std::string text = readFile(spec.outPath);
  CHECK(text.find("IRRED_SD,true,") != std::string::npos);
  CHECK(text.find("ratio_irredSD") != std::string::npos);
  std::remove("cli_irred.csv");
}

TEST_CASE("json format") {
  SweepSpec spec;
  spec.source.group = "A1";
  spec.source.lambda = {1};
  spec.nList = {16};
  spec.targets = {{-16}, {-15}};
  spec.estimators = {"exact", "CL"};
  spec.outPath = "cli_out.json";
  spec.format = "json";
  CHECK(runCompare(spec) == 0);
  std::string text = readFile(spec.outPath);
  CHECK(text.find("\"columns\"") != std::string::npos);
  CHECK(text.find("null") != std::string::npos);  // missing fields are null
  std::remove("cli_out.json");
}

TEST_CASE("rate profile") {
  writeStepsFile();
  SweepSpec spec;
  spec.source.stepsFile = kStepsFile;
  spec.nList = {64};
  spec.estimators = {"exact"};
  spec.outPath = "cli_rate.csv";
  CHECK(runRateProfile(spec, 5) == 0);
  std::string text = readFile(spec.outPath);
  CHECK(text.find("# center-of-mass: 1") != std::string::npos);
  CHECK(text.find("x0,rate,delta,det_hessian,empirical_rate_N64") != std::string::npos);
  // the midpoint x=1 appears as a grid row
  CHECK(text.find("\n1,") != std::string::npos);
  std::remove("cli_rate.csv");
  std::remove(kStepsFile);
}

TEST_CASE("cli binary end to end") {
  writeStepsFile();
  CHECK(runCli("compare --steps cli_steps.json --N 8,16 --ray 1 "
               "--estimators exact,SD --out cli_bin.csv") == 0);
  std::string text = readFile("cli_bin.csv");
  CHECK(text.find("log_SD") != std::string::npos);
  std::remove("cli_bin.csv");

  // failure leaves no output behind
  CHECK(runCli("compare --steps missing.json --N 8 --ray 1 "
               "--estimators exact --out cli_fail.csv") != 0);
  std::ifstream f("cli_fail.csv");
  CHECK_FALSE(f.good());
  std::remove(kStepsFile);
}
