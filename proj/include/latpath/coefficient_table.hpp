#ifndef LATPATH_COEFFICIENT_TABLE_HPP
#define LATPATH_COEFFICIENT_TABLE_HPP

#include "latpath/step_set.hpp"

namespace latpath {

struct MemoryCapExceededError : std::runtime_error {
  unsigned long long requiredCells;
  explicit MemoryCapExceededError(unsigned long long cells)
      : std::runtime_error("coefficient table needs " + std::to_string(cells) +
                           " cells, above the memory cap"),
        requiredCells(cells) {}
};

/// Dense table of the coefficients of k(w)^N over the bounding box of N*P.
/// Values are stored as exact integers over a common denominator so that
/// rational weights cost nothing during convolution.
class CoefficientTable {
 public:
  CoefficientTable(int dim, IntVec lo, IntVec hi, BigInt denom);

  int dim() const { return dim_; }
  const IntVec& lo() const { return lo_; }
  const IntVec& hi() const { return hi_; }
  const BigInt& denom() const { return denom_; }
  unsigned long long cellCount() const { return values_.size(); }

  bool contains(const IntVec& gamma) const;
  const BigInt& numerator(const IntVec& gamma) const;  // 0 outside the box
  BigInt& at(const IntVec& gamma);
  Rational value(const IntVec& gamma) const;

  /// Exact integer value; throws if the entry is not integral.
  BigInt integerValue(const IntVec& gamma) const;

  /// Natural log of the exact value; -inf for zero entries.
  double logValue(const IntVec& gamma) const;

  Rational mass() const;

  const std::vector<BigInt>& raw() const { return values_; }
  std::vector<BigInt>& raw() { return values_; }
  long long flatIndex(const IntVec& gamma) const;
  IntVec gammaOfFlat(long long idx) const;

 private:
  int dim_;
  IntVec lo_, hi_;
  std::vector<long long> stride_;
  std::vector<BigInt> values_;
  BigInt denom_;
};

struct CountOptions {
  unsigned long long memCapCells = 1ull << 28;
  bool parallel = true;
};

/// Coefficients of k(w)^1, i.e. the weights themselves on S.
CoefficientTable baseTable(const WeightedStepSet& s,
                           const CountOptions& opts = {});

/// Coefficient-array convolution: (a*b)(gamma) = sum a(d) b(gamma-d).
CoefficientTable convolve(const CoefficientTable& a, const CoefficientTable& b,
                          const CountOptions& opts = {});
CoefficientTable convolveSerial(const CoefficientTable& a, const CoefficientTable& b,
                                const CountOptions& opts = {});

/// Exact table for k(w)^N by binary powering of convolutions.
CoefficientTable countPaths(const WeightedStepSet& s, long long n,
                            const CountOptions& opts = {});

/// N-fold sequential convolution; oracle for the binary-powering path.
CoefficientTable countPathsNaive(const WeightedStepSet& s, long long n,
                                 const CountOptions& opts = {});

}  // namespace latpath

#endif
