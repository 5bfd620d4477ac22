#ifndef LATPATH_DUAL_SOLVER_HPP
#define LATPATH_DUAL_SOLVER_HPP

#include "latpath/step_set.hpp"

namespace latpath {

struct DualSolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInteriorError : DualSolverError {
  NotInteriorError() : DualSolverError("target point is not in the interior of conv(S)") {}
};
struct NoConvergenceError : DualSolverError {
  Vec bestTau;
  double residual;
  NoConvergenceError(Vec tau, double res)
      : DualSolverError("moment-map inversion did not converge (residual " +
                        std::to_string(res) + ")"),
        bestTau(std::move(tau)),
        residual(res) {}
};
struct BoundaryUnsupportedError : DualSolverError {
  BoundaryUnsupportedError()
      : DualSolverError("rate function on the polytope boundary is not resolved") {}
};

/// k(tau) = sum c(b) e^<b,tau> together with its log-derivatives.
struct CharacterEvaluation {
  Vec tau;
  double value;
  double logValue;
  Vec gradient;     // moment map, lies in the open polytope
  Mat hessianLogK;  // positive definite
};

struct DualPoint {
  Vec x;
  Vec tau;
  double delta;       // log k(tau) - <x, tau>
  Mat hessian;        // A at tau
  double hessianDet;
  double rate;        // log V(S) - delta
  double gradResidual;
};

CharacterEvaluation evalCharacter(const WeightedStepSet& s, const Vec& tau);

/// Center of mass = moment map at tau = 0, exact.
RatVec centerOfMassExact(const WeightedStepSet& s);
Vec centerOfMass(const WeightedStepSet& s);

/// Damped Newton minimization of f_x(tau) = log k(tau) - <x,tau>.
DualPoint invertMomentMap(const WeightedStepSet& s, const Vec& x, double tol = 1e-12);

double rateFunction(const WeightedStepSet& s, const Vec& x);

}  // namespace latpath

#endif
