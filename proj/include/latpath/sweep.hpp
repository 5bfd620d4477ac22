#ifndef LATPATH_SWEEP_HPP
#define LATPATH_SWEEP_HPP

#include "latpath/asymptotics.hpp"
#include "latpath/coefficient_table.hpp"
#include "latpath/multiplicities.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latpath {

struct SweepSource {
  std::string stepsFile;  // either this
  std::string group;      // or this + lambda
  IntVec lambda;
};

struct SweepSpec {
  SweepSource source;
  std::vector<long long> nList;
  std::vector<IntVec> targets;            // explicit gamma (or nu/mu) list
  std::optional<std::pair<IntVec, IntVec>> ray;  // gamma = N*alpha + f
  std::optional<double> gridRadius;       // all admissible gamma within r*sqrt(N)
  std::vector<std::string> estimators;    // exact, CL, MD, SD, irredSD, irredCL, rate
  RegimeThresholds thresholds;
  double tol = 1e-12;
  unsigned long long memCapCells = 1ull << 28;
  std::string outPath;
  std::string format = "csv";  // csv | json
  int threads = 0;             // 0 = library default
};

/// Exact-vs-estimate sweep; returns process exit status (0 on success).
int runCompare(const SweepSpec& spec);

/// Rate-function profile over an interior grid.
int runRateProfile(const SweepSpec& spec, int gridPoints);

}  // namespace latpath

#endif
