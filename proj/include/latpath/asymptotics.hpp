#ifndef LATPATH_ASYMPTOTICS_HPP
#define LATPATH_ASYMPTOTICS_HPP

#include "latpath/dual_solver.hpp"
#include "latpath/root_system.hpp"

#include <string>

namespace latpath {

struct AsymptoticsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInStepSetError : AsymptoticsError {
  NotInStepSetError() : AsymptoticsError("alpha is not a step of S") {}
};
struct FNotInDifferenceLatticeError : AsymptoticsError {
  FNotInDifferenceLatticeError()
      : AsymptoticsError("offset f is not in the difference lattice") {}
};
struct SupportViolationError : AsymptoticsError {
  SupportViolationError()
      : AsymptoticsError("target fails the support congruence; exact value is 0") {}
};
struct NotAWeightError : AsymptoticsError {
  NotAWeightError() : AsymptoticsError("nu is not a weight of the diagram") {}
};
struct NotSemisimpleError : AsymptoticsError {
  NotSemisimpleError()
      : AsymptoticsError("estimator requires a semisimple group (A1 or A2)") {}
};

enum class Regime { CL, MD, SD, IrredSD, IrredCL };

std::string regimeName(Regime r);

struct AsymptoticEstimate {
  double logValue;         // N*exponentPerStep + linearTerm + logPrefactor
  double exponentPerStep;  // delta or log V(S)
  double linearTerm;       // -<f,tau> or the Gaussian exponent
  double logPrefactor;
  Regime regime;
  std::string errorOrder;
  bool degenerateLeadingTerm = false;
};

struct RegimeThresholds {
  double clCut = 3.0;   // CL when distance <= clCut * sqrt(N)
  double mdSmax = 0.75;  // MD when distance <= N^mdSmax
};

struct RegimeDecision {
  IntVec gamma;
  long long n;
  double distance;   // ||gamma - N m*_S||
  double sExponent;  // log distance / log N
  Regime regime;
};

AsymptoticEstimate estimateStrongDeviation(const WeightedStepSet& s, const IntVec& alpha,
                                           const IntVec& f, long long n,
                                           double tol = 1e-12);

AsymptoticEstimate estimateModerateDeviation(const WeightedStepSet& s, const IntVec& gamma,
                                             long long n, double tol = 1e-12);

AsymptoticEstimate estimateCentralLimit(const WeightedStepSet& s, const IntVec& gamma,
                                        long long n);

RegimeDecision classifyRegime(const WeightedStepSet& s, const IntVec& gamma, long long n,
                              const RegimeThresholds& thr = {});

AsymptoticEstimate estimateWeightMultiplicity(const WeightDiagram& d, const IntVec& nu,
                                              long long n, const RegimeThresholds& thr = {},
                                              double tol = 1e-12);

AsymptoticEstimate estimateIrreducibleSD(const WeightDiagram& d, const IntVec& nu,
                                         long long n, double tol = 1e-12);

AsymptoticEstimate estimateIrreducibleCL(const WeightDiagram& d, const IntVec& mu,
                                         long long n);

}  // namespace latpath

#endif
