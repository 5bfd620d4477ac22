#ifndef LATPATH_SIMPLEX_HPP
#define LATPATH_SIMPLEX_HPP

#include "latpath/numeric.hpp"

namespace latpath {

/// Exact rational LP in standard form: maximize c^T y subject to
/// A y = b, y >= 0. Two-phase simplex with Bland's rule (no cycling).
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status;
  Rational objective;
  RatVec solution;
};

LpResult solveLp(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c);

}  // namespace latpath

#endif
