#include "latpath/dual_solver.hpp"

#include "latpath/linalg.hpp"

#include <cmath>
#include <limits>

namespace latpath {

CharacterEvaluation evalCharacter(const WeightedStepSet& s, const Vec& tau) {
  const int m = s.dim();
  if (static_cast<int>(tau.size()) != m) throw DimensionMismatchError();
  for (double t : tau)
    if (!std::isfinite(t)) throw DualSolverError("non-finite tau");

  const int ns = s.size();
  // log-sum-exp with max shift
  std::vector<double> expo(ns);
  double mx = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < ns; ++i) {
    double e = std::log(toDouble(s.weights()[i]));
    for (int r = 0; r < m; ++r) e += s.steps()[i][r] * tau[r];
    expo[i] = e;
    mx = std::max(mx, e);
  }
  double sum = 0;
  std::vector<double> p(ns);
  for (int i = 0; i < ns; ++i) {
    p[i] = std::exp(expo[i] - mx);
    sum += p[i];
  }
  for (auto& v : p) v /= sum;  // softmax probabilities

  CharacterEvaluation ev;
  ev.tau = tau;
  ev.logValue = mx + std::log(sum);
  ev.value = std::exp(ev.logValue);
  ev.gradient.assign(m, 0);
  for (int i = 0; i < ns; ++i)
    for (int r = 0; r < m; ++r) ev.gradient[r] += p[i] * s.steps()[i][r];
  ev.hessianLogK.assign(m, Vec(m, 0));
  for (int i = 0; i < ns; ++i)
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        ev.hessianLogK[r][c] +=
            p[i] * (s.steps()[i][r] - ev.gradient[r]) * (s.steps()[i][c] - ev.gradient[c]);
  return ev;
}

RatVec centerOfMassExact(const WeightedStepSet& s) { return s.centerOfMass(); }

Vec centerOfMass(const WeightedStepSet& s) {
  RatVec com = s.centerOfMass();
  Vec v(com.size());
  for (size_t i = 0; i < com.size(); ++i) v[i] = toDouble(com[i]);
  return v;
}

DualPoint invertMomentMap(const WeightedStepSet& s, const Vec& x, double tol) {
  const int m = s.dim();
  if (static_cast<int>(x.size()) != m) throw DimensionMismatchError();
  {
    RatVec xr(m);
    for (int r = 0; r < m; ++r) xr[r] = doubleToRational(x[r]);
    if (s.classify(xr).location != PointLocation::Interior) throw NotInteriorError();
  }

  Vec tau(m, 0.0);
  auto objective = [&](const Vec& t) {
    double v = evalCharacter(s, t).logValue;
    for (int r = 0; r < m; ++r) v -= x[r] * t[r];
    return v;
  };

  CharacterEvaluation ev = evalCharacter(s, tau);
  double fval = ev.logValue;  // <x, 0> = 0
  const int maxIter = 200;
  for (int iter = 0; iter < maxIter; ++iter) {
    Vec grad(m);
    double res = 0;
    for (int r = 0; r < m; ++r) {
      grad[r] = ev.gradient[r] - x[r];
      res = std::max(res, std::fabs(grad[r]));
    }
    if (res <= tol) {
      DualPoint dp;
      dp.x = x;
      dp.tau = tau;
      dp.delta = fval;
      dp.hessian = ev.hessianLogK;
      dp.hessianDet = determinant(ev.hessianLogK);
      dp.rate = std::log(toDouble(s.totalWeight())) - dp.delta;
      dp.gradResidual = res;
      return dp;
    }

    Vec dir = solveLinear(ev.hessianLogK, grad);
    for (auto& d : dir) d = -d;
    double slope = dot(grad, dir);  // negative for a descent direction

    // Armijo backtracking, factor 1/2, slope 1e-4; the absolute slack keeps
    // the search from stalling on rounding noise once f is flat near optimum
    const double slack = 4e-16 * std::max(1.0, std::fabs(fval));
    double step = 1.0;
    Vec trial(m);
    double ftrial;
    for (;;) {
      for (int r = 0; r < m; ++r) trial[r] = tau[r] + step * dir[r];
      ftrial = objective(trial);
      if (ftrial <= fval + 1e-4 * step * slope + slack) break;
      step *= 0.5;
      if (step < 1e-16) throw NoConvergenceError(tau, res);
    }
    tau = trial;
    fval = ftrial;
    double norm = 0;
    for (double t : tau) norm = std::max(norm, std::fabs(t));
    if (norm > 1e4) throw NoConvergenceError(tau, res);
    ev = evalCharacter(s, tau);
  }

  double res = 0;
  for (int r = 0; r < m; ++r) res = std::max(res, std::fabs(ev.gradient[r] - x[r]));
  throw NoConvergenceError(tau, res);
}

double rateFunction(const WeightedStepSet& s, const Vec& x) {
  RatVec xr(x.size());
  for (size_t r = 0; r < x.size(); ++r) xr[r] = doubleToRational(x[r]);
  auto loc = s.classify(xr).location;
  if (loc == PointLocation::Boundary) throw BoundaryUnsupportedError();
  if (loc == PointLocation::Outside) throw NotInteriorError();
  return invertMomentMap(s, x).rate;
}

}  // namespace latpath
