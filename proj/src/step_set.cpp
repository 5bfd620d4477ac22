#include "latpath/step_set.hpp"

#include "latpath/simplex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>

namespace latpath {

WeightedStepSet::WeightedStepSet(int dim, std::vector<IntVec> steps, RatVec weights)
    : dim_(dim), steps_(std::move(steps)), weights_(std::move(weights)) {
  if (dim_ < 1) throw DimensionMismatchError();
  if (steps_.size() != weights_.size()) throw DimensionMismatchError();
  if (steps_.size() < 2) throw StepSetError("need at least two steps");
  std::set<IntVec> seen;
  for (const auto& s : steps_) {
    if (static_cast<int>(s.size()) != dim_) throw DimensionMismatchError();
    if (!seen.insert(s).second) throw DuplicateStepError();
  }
  for (const auto& w : weights_)
    if (w <= 0) throw NonPositiveWeightError();

  // differences against the first step generate the same lattice as all
  // pairwise differences
  std::vector<std::vector<BigInt>> gens;
  for (size_t i = 1; i < steps_.size(); ++i) {
    std::vector<BigInt> d(dim_);
    for (int r = 0; r < dim_; ++r) d[r] = BigInt(steps_[i][r]) - BigInt(steps_[0][r]);
    gens.push_back(std::move(d));
  }
  auto h = hermiteBasis(dim_, gens);
  if (!h) throw SpanDeficientError();
  basis_diff_ = std::move(*h);
  pi_order_ = latticeIndex(basis_diff_);
}

Rational WeightedStepSet::totalWeight() const {
  Rational v = 0;
  for (const auto& w : weights_) v += w;
  return v;
}

RatVec WeightedStepSet::centerOfMass() const {
  RatVec com(dim_, 0);
  for (size_t i = 0; i < steps_.size(); ++i)
    for (int r = 0; r < dim_; ++r) com[r] += weights_[i] * steps_[i][r];
  Rational v = totalWeight();
  for (auto& e : com) e /= v;
  return com;
}

bool WeightedStepSet::supportTest(long long n, const IntVec& gamma) const {
  if (static_cast<int>(gamma.size()) != dim_) throw DimensionMismatchError();
  std::vector<BigInt> v(dim_);
  for (int r = 0; r < dim_; ++r) v[r] = BigInt(gamma[r]) - BigInt(n) * steps_[0][r];
  return inLattice(basis_diff_, v);
}

PolytopePoint WeightedStepSet::classify(const RatVec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw DimensionMismatchError();
  const int ns = size();

  // membership: t >= 0, sum t = 1, sum t_b b = x
  {
    std::vector<RatVec> a(dim_ + 1, RatVec(ns, 0));
    RatVec b(dim_ + 1, 0), c(ns, 0);
    for (int j = 0; j < ns; ++j) {
      a[0][j] = 1;
      for (int r = 0; r < dim_; ++r) a[r + 1][j] = steps_[j][r];
    }
    b[0] = 1;
    for (int r = 0; r < dim_; ++r) b[r + 1] = x[r];
    auto res = solveLp(a, b, c);
    if (res.status == LpResult::Status::Infeasible)
      return {x, PointLocation::Outside};
  }

  // relative interior certificate: maximize s with t_b >= s for all b.
  // x is in the relative interior of conv(S) iff it admits a convex
  // combination using every vertex with strictly positive coefficients;
  // the span condition makes relative interior = interior.
  // variables: t (ns), s (1), slack u (ns)
  const int nv = 2 * ns + 1;
  std::vector<RatVec> a(dim_ + 1 + ns, RatVec(nv, 0));
  RatVec b(dim_ + 1 + ns, 0), c(nv, 0);
  for (int j = 0; j < ns; ++j) {
    a[0][j] = 1;
    for (int r = 0; r < dim_; ++r) a[r + 1][j] = steps_[j][r];
    a[dim_ + 1 + j][j] = 1;
    a[dim_ + 1 + j][ns] = -1;
    a[dim_ + 1 + j][ns + 1 + j] = -1;
  }
  b[0] = 1;
  for (int r = 0; r < dim_; ++r) b[r + 1] = x[r];
  c[ns] = 1;
  auto res = solveLp(a, b, c);
  if (res.status != LpResult::Status::Optimal)
    throw StepSetError("interiority LP failed unexpectedly");
  return {x, res.objective > 0 ? PointLocation::Interior : PointLocation::Boundary};
}

WeightedStepSet readStepSetJson(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StepSetError("cannot open step-set file: " + path);
  nlohmann::json j;
  in >> j;
  int dim = j.at("dim").get<int>();
  std::vector<IntVec> steps;
  RatVec weights;
  for (const auto& entry : j.at("steps")) {
    steps.push_back(entry.at("coords").get<IntVec>());
    const auto& w = entry.at("weight");
    if (w.is_number_integer())
      weights.emplace_back(w.get<long long>());
    else
      weights.push_back(parseRational(w.get<std::string>()));
  }
  return WeightedStepSet(dim, std::move(steps), std::move(weights));
}

}  // namespace latpath
