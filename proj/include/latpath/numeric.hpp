#ifndef LATPATH_NUMERIC_HPP
#define LATPATH_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace latpath {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rational>;
using Vec = std::vector<double>;
using Mat = std::vector<std::vector<double>>;

/// Parses "p/q" or a bare integer into an exact rational.
Rational parseRational(const std::string& text);

std::string rationalToString(const Rational& r);

/// Natural log of a positive big integer, accurate to ~1e-15 relative
/// (top 64 bits of the mantissa plus the exact bit length).
double logBigInt(const BigInt& n);

/// Natural log of a positive rational.
double logRational(const Rational& r);

double toDouble(const Rational& r);

inline Rational doubleToRational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);
  // mant * 2^53 is integral
  auto num = static_cast<long long>(std::ldexp(mant, 53));
  Rational r(num);
  int shift = exp - 53;
  if (shift > 0)
    r *= Rational(BigInt(1) << shift);
  else if (shift < 0)
    r /= Rational(BigInt(1) << (-shift));
  return r;
}

}  // namespace latpath

#endif
