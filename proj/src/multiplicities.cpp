#include "latpath/multiplicities.hpp"

namespace latpath {

BigInt weightMultiplicity(const WeightDiagram& d, const CoefficientTable& table,
                          long long n, const IntVec& nu) {
  auto gamma = d.shiftCoords(n, nu);
  if (!gamma) return 0;  // nu - N lambda outside the X* lattice
  return table.integerValue(*gamma);
}

BigInt weightMultiplicity(const WeightDiagram& d, long long n, const IntVec& nu,
                          const CountOptions& opts) {
  return weightMultiplicity(d, countPaths(d.stepSet(), n, opts), n, nu);
}

IntVec rhoShiftedWeight(const RootSystemData& r, const WeylElement& w, const IntVec& mu) {
  const int rt = r.rankT();
  IntVec out(rt);
  for (int i = 0; i < rt; ++i) {
    Rational s = Rational(mu[i]) + r.rho()[i];
    for (int j = 0; j < rt; ++j) s -= w.matrix[i][j] * r.rho()[j];
    if (boost::multiprecision::denominator(s) != 1)
      throw RootSystemError("rho shift is not integral");
    out[i] = static_cast<long long>(BigInt(boost::multiprecision::numerator(s)));
  }
  return out;
}

BigInt irreducibleMultiplicity(const WeightDiagram& d, const CoefficientTable& table,
                               long long n, const IntVec& mu) {
  const RootSystemData& r = d.root();
  if (!r.isDominant(mu)) throw NotDominantError();
  BigInt acc = 0;
  for (const auto& w : r.weylElements())
    acc += w.sign * weightMultiplicity(d, table, n, rhoShiftedWeight(r, w, mu));
  if (acc < 0) throw RootSystemError("negative irreducible multiplicity");
  return acc;
}

BigInt irreducibleMultiplicity(const WeightDiagram& d, long long n, const IntVec& mu,
                               const CountOptions& opts) {
  return irreducibleMultiplicity(d, countPaths(d.stepSet(), n, opts), n, mu);
}

}  // namespace latpath
