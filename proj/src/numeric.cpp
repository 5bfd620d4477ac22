#include "latpath/numeric.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <sstream>

namespace latpath {

Rational parseRational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    return Rational(BigInt(text));
  }
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational: " + text);
  return Rational(num, den);
}

std::string rationalToString(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

double logBigInt(const BigInt& n) {
  if (n <= 0) throw std::domain_error("logBigInt: nonpositive argument");
  const auto bits = msb(n);  // floor(log2 n)
  if (bits <= 62) return std::log(static_cast<double>(n.convert_to<long long>()));
  // keep the top 62 bits, shift the rest away
  const unsigned drop = static_cast<unsigned>(bits - 62);
  BigInt top = n >> drop;
  return std::log(static_cast<double>(top.convert_to<long long>())) +
         static_cast<double>(drop) * std::log(2.0);
}

double logRational(const Rational& r) {
  return logBigInt(numerator(r)) - logBigInt(denominator(r));
}

double toDouble(const Rational& r) { return r.convert_to<double>(); }

}  // namespace latpath
