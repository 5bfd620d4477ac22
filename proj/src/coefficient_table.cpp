#include "latpath/coefficient_table.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace latpath {

namespace {

const BigInt kZero = 0;

unsigned long long boxCells(const IntVec& lo, const IntVec& hi) {
  unsigned long long n = 1;
  for (size_t r = 0; r < lo.size(); ++r) {
    if (hi[r] < lo[r]) throw std::logic_error("empty bounding box");
    n *= static_cast<unsigned long long>(hi[r] - lo[r] + 1);
  }
  return n;
}

}  // namespace

CoefficientTable::CoefficientTable(int dim, IntVec lo, IntVec hi, BigInt denom)
    : dim_(dim), lo_(std::move(lo)), hi_(std::move(hi)), denom_(std::move(denom)) {
  stride_.assign(dim_, 1);
  for (int r = dim_ - 2; r >= 0; --r)
    stride_[r] = stride_[r + 1] * (hi_[r + 1] - lo_[r + 1] + 1);
  values_.assign(boxCells(lo_, hi_), BigInt(0));
}

bool CoefficientTable::contains(const IntVec& gamma) const {
  if (static_cast<int>(gamma.size()) != dim_) throw DimensionMismatchError();
  for (int r = 0; r < dim_; ++r)
    if (gamma[r] < lo_[r] || gamma[r] > hi_[r]) return false;
  return true;
}

long long CoefficientTable::flatIndex(const IntVec& gamma) const {
  long long idx = 0;
  for (int r = 0; r < dim_; ++r) idx += (gamma[r] - lo_[r]) * stride_[r];
  return idx;
}

IntVec CoefficientTable::gammaOfFlat(long long idx) const {
  IntVec g(dim_);
  for (int r = 0; r < dim_; ++r) {
    g[r] = lo_[r] + idx / stride_[r];
    idx %= stride_[r];
  }
  return g;
}

const BigInt& CoefficientTable::numerator(const IntVec& gamma) const {
  if (!contains(gamma)) return kZero;
  return values_[flatIndex(gamma)];
}

BigInt& CoefficientTable::at(const IntVec& gamma) {
  if (!contains(gamma)) throw std::out_of_range("gamma outside table box");
  return values_[flatIndex(gamma)];
}

Rational CoefficientTable::value(const IntVec& gamma) const {
  return Rational(numerator(gamma)) / Rational(denom_);
}

BigInt CoefficientTable::integerValue(const IntVec& gamma) const {
  const BigInt& num = numerator(gamma);
  if (num % denom_ != 0) throw std::runtime_error("entry is not an integer");
  return num / denom_;
}

double CoefficientTable::logValue(const IntVec& gamma) const {
  const BigInt& num = numerator(gamma);
  if (num == 0) return -std::numeric_limits<double>::infinity();
  return logBigInt(num) - logBigInt(denom_);
}

Rational CoefficientTable::mass() const {
  BigInt s = 0;
  for (const auto& v : values_) s += v;
  return Rational(s) / Rational(denom_);
}

CoefficientTable baseTable(const WeightedStepSet& s, const CountOptions& opts) {
  const int m = s.dim();
  IntVec lo(m, 0), hi(m, 0);
  for (int r = 0; r < m; ++r) {
    lo[r] = hi[r] = s.steps()[0][r];
    for (const auto& b : s.steps()) {
      lo[r] = std::min(lo[r], b[r]);
      hi[r] = std::max(hi[r], b[r]);
    }
  }
  if (boxCells(lo, hi) > opts.memCapCells)
    throw MemoryCapExceededError(boxCells(lo, hi));

  BigInt denom = 1;
  for (const auto& w : s.weights())
    denom = boost::multiprecision::lcm(denom, BigInt(boost::multiprecision::denominator(w)));
  CoefficientTable t(m, lo, hi, denom);
  for (int i = 0; i < s.size(); ++i) {
    Rational scaled = s.weights()[i] * denom;
    t.at(s.steps()[i]) = BigInt(boost::multiprecision::numerator(scaled));
  }
  return t;
}

namespace {

CoefficientTable convolveImpl(const CoefficientTable& a, const CoefficientTable& b,
                              const CountOptions& opts, bool parallel) {
  const int m = a.dim();
  if (b.dim() != m) throw DimensionMismatchError();
  IntVec lo(m), hi(m);
  for (int r = 0; r < m; ++r) {
    lo[r] = a.lo()[r] + b.lo()[r];
    hi[r] = a.hi()[r] + b.hi()[r];
  }
  if (boxCells(lo, hi) > opts.memCapCells)
    throw MemoryCapExceededError(boxCells(lo, hi));
  CoefficientTable out(m, lo, hi, a.denom() * b.denom());

  // gather form: each output cell sums over the cells of b, so cells are
  // independent and the loop parallelizes without write conflicts
  const long long nOut = static_cast<long long>(out.cellCount());
  const long long nB = static_cast<long long>(b.cellCount());
#pragma omp parallel for schedule(static) if (parallel)
  for (long long i = 0; i < nOut; ++i) {
    IntVec g = out.gammaOfFlat(i);
    BigInt acc = 0;
    IntVec d(m);
    for (long long j = 0; j < nB; ++j) {
      const BigInt& bv = b.raw()[j];
      if (bv == 0) continue;
      IntVec gb = b.gammaOfFlat(j);
      bool inA = true;
      for (int r = 0; r < m; ++r) {
        d[r] = g[r] - gb[r];
        if (d[r] < a.lo()[r] || d[r] > a.hi()[r]) {
          inA = false;
          break;
        }
      }
      if (!inA) continue;
      const BigInt& av = a.raw()[a.flatIndex(d)];
      if (av != 0) acc += av * bv;
    }
    out.raw()[i] = std::move(acc);
  }
  return out;
}

}  // namespace

CoefficientTable convolve(const CoefficientTable& a, const CoefficientTable& b,
                          const CountOptions& opts) {
  return convolveImpl(a, b, opts, opts.parallel);
}

CoefficientTable convolveSerial(const CoefficientTable& a, const CoefficientTable& b,
                                const CountOptions& opts) {
  return convolveImpl(a, b, opts, false);
}

CoefficientTable countPaths(const WeightedStepSet& s, long long n,
                            const CountOptions& opts) {
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  CoefficientTable base = baseTable(s, opts);
  CoefficientTable result = base;  // base^1; bits of n-1 add the rest
  long long remaining = n - 1;
  while (remaining > 0) {
    if (remaining & 1) result = convolve(result, base, opts);
    remaining >>= 1;
    if (remaining > 0) base = convolve(base, base, opts);
  }
  return result;
}

CoefficientTable countPathsNaive(const WeightedStepSet& s, long long n,
                                 const CountOptions& opts) {
  if (n < 1) throw std::invalid_argument("N must be >= 1");
  CoefficientTable base = baseTable(s, opts);
  CoefficientTable result = base;
  for (long long i = 1; i < n; ++i) result = convolveSerial(result, base, opts);
  return result;
}

}  // namespace latpath
