#include "latpath/asymptotics.hpp"

#include "latpath/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latpath {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double logPi(const WeightedStepSet& s) { return logBigInt(s.piOrder()); }

Vec toVec(const IntVec& v) { return Vec(v.begin(), v.end()); }

bool inDifferenceLattice(const WeightedStepSet& s, const IntVec& f) {
  std::vector<BigInt> v(f.begin(), f.end());
  return solveLattice(s.basisDiff(), v).has_value();
}

}  // namespace

std::string regimeName(Regime r) {
  switch (r) {
    case Regime::CL: return "CL";
    case Regime::MD: return "MD";
    case Regime::SD: return "SD";
    case Regime::IrredSD: return "IRRED_SD";
    case Regime::IrredCL: return "IRRED_CL";
  }
  return "?";
}

AsymptoticEstimate estimateStrongDeviation(const WeightedStepSet& s, const IntVec& alpha,
                                           const IntVec& f, long long n, double tol) {
  if (std::find(s.steps().begin(), s.steps().end(), alpha) == s.steps().end())
    throw NotInStepSetError();
  if (!inDifferenceLattice(s, f)) throw FNotInDifferenceLatticeError();

  DualPoint dp = invertMomentMap(s, toVec(alpha), tol);
  AsymptoticEstimate est;
  est.regime = Regime::SD;
  est.errorOrder = "1+O(N^{-1})";
  est.exponentPerStep = dp.delta;
  est.linearTerm = -dot(toVec(f), dp.tau);
  est.logPrefactor = -0.5 * s.dim() * std::log(kTwoPi * n) + logPi(s) -
                     0.5 * std::log(dp.hessianDet);
  est.logValue = n * est.exponentPerStep + est.linearTerm + est.logPrefactor;
  return est;
}

AsymptoticEstimate estimateModerateDeviation(const WeightedStepSet& s, const IntVec& gamma,
                                             long long n, double tol) {
  if (!s.supportTest(n, gamma)) throw SupportViolationError();
  const int m = s.dim();
  Vec x(m);
  RatVec xr(m);
  for (int r = 0; r < m; ++r) {
    xr[r] = Rational(gamma[r], n);
    x[r] = toDouble(xr[r]);
  }
  if (s.classify(xr).location != PointLocation::Interior) throw NotInteriorError();

  DualPoint dp = invertMomentMap(s, x, tol);
  AsymptoticEstimate est;
  est.regime = Regime::MD;
  est.errorOrder = "1+O(N^{-(1-s)})";
  est.exponentPerStep = dp.delta;
  est.linearTerm = 0;
  est.logPrefactor =
      -0.5 * m * std::log(kTwoPi * n) + logPi(s) - 0.5 * std::log(dp.hessianDet);
  est.logValue = n * est.exponentPerStep + est.logPrefactor;
  return est;
}

AsymptoticEstimate estimateCentralLimit(const WeightedStepSet& s, const IntVec& gamma,
                                        long long n) {
  if (!s.supportTest(n, gamma)) throw SupportViolationError();
  const int m = s.dim();
  CharacterEvaluation ev = evalCharacter(s, Vec(m, 0.0));  // at the peak
  Vec d(m);
  for (int r = 0; r < m; ++r) d[r] = gamma[r] - n * ev.gradient[r];
  Vec aid = solveLinear(ev.hessianLogK, d);

  double dist = std::sqrt(dot(d, d));
  double sExp = dist > 1 ? std::log(dist) / std::log(double(n)) : 0.0;

  AsymptoticEstimate est;
  est.regime = Regime::CL;
  est.errorOrder = sExp <= 0.5 ? "1+O(N^{-(1-s)})" : "1+o(N^{3s-2})";
  est.exponentPerStep = ev.logValue;  // log V(S)
  est.linearTerm = -dot(aid, d) / (2.0 * n);
  est.logPrefactor = -0.5 * m * std::log(kTwoPi * n) + logPi(s) -
                     0.5 * std::log(determinant(ev.hessianLogK));
  est.logValue = n * est.exponentPerStep + est.linearTerm + est.logPrefactor;
  return est;
}

RegimeDecision classifyRegime(const WeightedStepSet& s, const IntVec& gamma, long long n,
                              const RegimeThresholds& thr) {
  Vec com = centerOfMass(s);
  double d2 = 0;
  for (int r = 0; r < s.dim(); ++r) {
    double dr = gamma[r] - n * com[r];
    d2 += dr * dr;
  }
  RegimeDecision dec;
  dec.gamma = gamma;
  dec.n = n;
  dec.distance = std::sqrt(d2);
  dec.sExponent = dec.distance > 1 ? std::log(dec.distance) / std::log(double(n)) : 0.0;
  if (dec.distance <= thr.clCut * std::sqrt(double(n)))
    dec.regime = Regime::CL;
  else if (dec.distance <= std::pow(double(n), thr.mdSmax))
    dec.regime = Regime::MD;
  else
    dec.regime = Regime::SD;
  return dec;
}

AsymptoticEstimate estimateWeightMultiplicity(const WeightDiagram& d, const IntVec& nu,
                                              long long n, const RegimeThresholds& thr,
                                              double tol) {
  const WeightedStepSet& s = d.stepSet();
  auto gamma = d.shiftCoords(n, nu);
  if (!gamma) throw SupportViolationError();
  RegimeDecision dec = classifyRegime(s, *gamma, n, thr);
  switch (dec.regime) {
    case Regime::CL:
      return estimateCentralLimit(s, *gamma, n);
    case Regime::MD:
      return estimateModerateDeviation(s, *gamma, n, tol);
    default: {
      // SD ray: alpha is the nearest step to gamma/N, f the remainder
      const IntVec* best = nullptr;
      double bestDist = std::numeric_limits<double>::infinity();
      for (const auto& beta : s.steps()) {
        double d2 = 0;
        for (int r = 0; r < s.dim(); ++r) {
          double dr = double((*gamma)[r]) - double(n) * beta[r];
          d2 += dr * dr;
        }
        if (d2 < bestDist) {
          bestDist = d2;
          best = &beta;
        }
      }
      IntVec f(s.dim());
      for (int r = 0; r < s.dim(); ++r) f[r] = (*gamma)[r] - n * (*best)[r];
      return estimateStrongDeviation(s, *best, f, n, tol);
    }
  }
}

AsymptoticEstimate estimateIrreducibleSD(const WeightDiagram& d, const IntVec& nu,
                                         long long n, double tol) {
  const RootSystemData& r = d.root();
  if (!r.isDominant(nu)) throw NotDominantError();
  if (d.multiplicity(nu) == 0) throw NotAWeightError();
  const WeightedStepSet& s = d.stepSet();
  auto gamma = d.shiftCoords(1, nu);
  if (!gamma) throw NotAWeightError();

  DualPoint dp = invertMomentMap(s, toVec(*gamma), tol);  // throws NotInterior on Q boundary
  double delta = r.weylDenominator(dp.tau);
  RatVec rhoX = r.rhoXstar();
  double rhoTau = 0;
  for (int i = 0; i < r.m(); ++i) rhoTau += toDouble(rhoX[i]) * dp.tau[i];

  AsymptoticEstimate est;
  est.regime = Regime::IrredSD;
  est.errorOrder = "1+O(N^{-1})";
  est.exponentPerStep = dp.delta;
  est.linearTerm = 0;
  est.degenerateLeadingTerm = std::fabs(delta) <= 1e-9;
  if (est.degenerateLeadingTerm) {
    est.logPrefactor = -std::numeric_limits<double>::infinity();
  } else {
    est.logPrefactor = -0.5 * r.m() * std::log(kTwoPi * n) +
                       logBigInt(r.piGroupOrderG()) + std::log(delta) - rhoTau -
                       0.5 * std::log(dp.hessianDet);
  }
  est.logValue = n * est.exponentPerStep + est.logPrefactor;
  return est;
}

AsymptoticEstimate estimateIrreducibleCL(const WeightDiagram& d, const IntVec& mu,
                                         long long n) {
  const RootSystemData& r = d.root();
  if (r.name() != "A1" && r.name() != "A2") throw NotSemisimpleError();
  if (!r.isDominant(mu)) throw NotDominantError();
  const WeightedStepSet& s = d.stepSet();
  auto gamma = d.shiftCoords(n, mu);
  if (!gamma || !s.supportTest(n, *gamma)) throw SupportViolationError();

  const int m = r.m();
  CharacterEvaluation ev = evalCharacter(s, Vec(m, 0.0));
  const Mat& a = ev.hessianLogK;

  double logRootProduct = 0;
  RatVec rhoX = r.rhoXstar();
  Vec rhoV(m);
  for (int i = 0; i < m; ++i) rhoV[i] = toDouble(rhoX[i]);
  for (const auto& alpha : r.positiveRootsXstar())
    logRootProduct += std::log(dot(solveLinear(a, toVec(alpha)), rhoV));

  // mu + rho in X* coordinates
  Vec muRho(m);
  auto muX = r.toXstarCoords(mu);
  if (!muX) throw SupportViolationError();
  for (int i = 0; i < m; ++i) muRho[i] = (*muX)[i] + rhoV[i];

  const int dPos = static_cast<int>(r.positiveRoots().size());
  const double dimG = m + 2.0 * dPos;

  AsymptoticEstimate est;
  est.regime = Regime::IrredCL;
  est.errorOrder = "1+O(N^{-1/2})";
  est.exponentPerStep = logBigInt(d.dimension());
  est.linearTerm = -dot(solveLinear(a, muRho), muRho) / (2.0 * n);
  est.logPrefactor = logBigInt(r.piGroupOrderG()) + logBigInt(r.dimWeyl(mu)) +
                     logRootProduct - 0.5 * std::log(determinant(a)) -
                     0.5 * m * std::log(kTwoPi) - 0.5 * dimG * std::log(double(n));
  est.logValue = n * est.exponentPerStep + est.linearTerm + est.logPrefactor;
  return est;
}

}  // namespace latpath
