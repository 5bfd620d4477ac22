#include "latpath/sweep.hpp"

#include <CLI11.hpp>

#include <sstream>

namespace {

latpath::IntVec parseIntVec(const std::string& s) {
  latpath::IntVec out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "latpath: exact lattice-path / tensor-power multiplicities and their "
      "asymptotic estimates.\n"
      "Groups: A1 (weights in fundamental-weight units), A2 (fundamental-weight "
      "coordinates), U2 (weights (l1,l2) with l1 >= l2).\n"
      "Lattice-path targets are integer vectors in the coordinates of the step "
      "set; irreducible estimators take weights in the group's coordinates."};
  app.require_subcommand(1);

  latpath::SweepSpec spec;
  std::string nListStr, rayStr, targetsStr, lambdaStr, estimatorsStr = "exact";
  int gridPoints = 9;

  auto addCommon = [&](CLI::App* cmd) {
    cmd->add_option("--group", spec.source.group, "group name: A1, A2, U2");
    cmd->add_option("--lambda", lambdaStr, "dominant highest weight, comma-separated");
    cmd->add_option("--steps", spec.source.stepsFile, "step-set JSON file");
    cmd->add_option("--N", nListStr, "comma-separated ascending list of N");
    cmd->add_option("--tol", spec.tol, "Newton tolerance")->capture_default_str();
    cmd->add_option("--mem-cap", spec.memCapCells, "exact-table cell cap")
        ->capture_default_str();
    cmd->add_option("--out", spec.outPath, "output path")->required();
    cmd->add_option("--format", spec.format, "csv or json")->capture_default_str();
    cmd->add_option("--threads", spec.threads, "OpenMP thread count (0 = default)")
        ->capture_default_str();
  };

  CLI::App* compare = app.add_subcommand("compare", "exact oracle vs asymptotic estimates");
  addCommon(compare);
  compare->add_option("--targets", targetsStr,
                      "semicolon-separated target vectors, e.g. '0,0;2,1'");
  compare->add_option("--ray", rayStr, "alpha;f giving gamma = N*alpha + f");
  compare->add_option("--grid-radius", spec.gridRadius,
                      "sweep all admissible gamma within R*sqrt(N) of the center");
  compare->add_option("--estimators", estimatorsStr,
                      "comma list from exact,CL,MD,SD,rate,irredSD,irredCL")
      ->capture_default_str();
  compare->add_option("--cl-cut", spec.thresholds.clCut,
                      "CL regime when distance <= cl-cut*sqrt(N)")
      ->capture_default_str();
  compare->add_option("--md-smax", spec.thresholds.mdSmax,
                      "MD regime when distance <= N^md-smax")
      ->capture_default_str();

  CLI::App* rate = app.add_subcommand("rate-profile", "rate function on an interior grid");
  addCommon(rate);
  rate->add_option("--grid-points", gridPoints, "grid points per axis")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  if (!lambdaStr.empty()) spec.source.lambda = parseIntVec(lambdaStr);
  {
    std::stringstream ss(nListStr);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.nList.push_back(std::stoll(tok));
  }
  {
    std::stringstream ss(estimatorsStr);
    std::string tok;
    while (std::getline(ss, tok, ',')) spec.estimators.push_back(tok);
  }
  if (!targetsStr.empty()) {
    std::stringstream ss(targetsStr);
    std::string tok;
    while (std::getline(ss, tok, ';')) spec.targets.push_back(parseIntVec(tok));
  }
  if (!rayStr.empty()) {
    auto pos = rayStr.find(';');
    if (pos == std::string::npos) {
      spec.ray = {parseIntVec(rayStr), latpath::IntVec(parseIntVec(rayStr).size(), 0)};
    } else {
      spec.ray = {parseIntVec(rayStr.substr(0, pos)), parseIntVec(rayStr.substr(pos + 1))};
    }
  }

  if (compare->parsed()) return latpath::runCompare(spec);
  return latpath::runRateProfile(spec, gridPoints);
}
