#ifndef LATPATH_STEP_SET_HPP
#define LATPATH_STEP_SET_HPP

#include "latpath/hnf.hpp"
#include "latpath/numeric.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace latpath {

struct StepSetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SpanDeficientError : StepSetError {
  SpanDeficientError() : StepSetError("step differences do not span the ambient space") {}
};
struct NonPositiveWeightError : StepSetError {
  NonPositiveWeightError() : StepSetError("step weight must be strictly positive") {}
};
struct DuplicateStepError : StepSetError {
  DuplicateStepError() : StepSetError("duplicate step vector") {}
};
struct DimensionMismatchError : StepSetError {
  DimensionMismatchError() : StepSetError("dimension mismatch") {}
};

enum class PointLocation { Interior, Boundary, Outside };

struct PolytopePoint {
  RatVec coords;
  PointLocation location;
};

/// A finite set of integer step vectors with strictly positive rational
/// weights, together with the lattice data derived from the pairwise
/// differences: a Hermite-reduced basis of the difference lattice and the
/// index of that lattice in the ambient one.
///
/// All computations here are exact; no floating point.
class WeightedStepSet {
 public:
  WeightedStepSet(int dim, std::vector<IntVec> steps, RatVec weights);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(steps_.size()); }
  const std::vector<IntVec>& steps() const { return steps_; }
  const RatVec& weights() const { return weights_; }

  /// Hermite-reduced (lower-triangular, canonical) basis of the lattice
  /// spanned by the pairwise step differences, in ambient coordinates.
  const IntMat& basisDiff() const { return basis_diff_; }

  /// Index of the difference lattice in the ambient dual lattice.
  const BigInt& piOrder() const { return pi_order_; }

  /// Total weight V(S).
  Rational totalWeight() const;

  /// Exact center of mass sum c(b) b / V(S).
  RatVec centerOfMass() const;

  /// Necessary congruence for P_N(gamma) != 0: gamma - N b0 lies in the
  /// difference lattice (independent of the choice of b0 in S).
  bool supportTest(long long n, const IntVec& gamma) const;

  /// Exact classification of x against conv(S) via rational LP.
  PolytopePoint classify(const RatVec& x) const;

  bool isInterior(const RatVec& x) const {
    return classify(x).location == PointLocation::Interior;
  }

 private:
  int dim_;
  std::vector<IntVec> steps_;
  RatVec weights_;
  IntMat basis_diff_;
  BigInt pi_order_;
};

/// Parses the step-set JSON format:
/// { "dim": m, "steps": [ { "coords": [..], "weight": "p/q" }, ... ] }
WeightedStepSet readStepSetJson(const std::string& path);

}  // namespace latpath

#endif
