#ifndef LATPATH_ROOT_SYSTEM_HPP
#define LATPATH_ROOT_SYSTEM_HPP

#include "latpath/step_set.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>

namespace latpath {

struct RootSystemError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnknownNameError : RootSystemError {
  explicit UnknownNameError(const std::string& n)
      : RootSystemError("unknown group name: " + n) {}
};
struct NotDominantError : RootSystemError {
  NotDominantError() : RootSystemError("weight is not dominant") {}
};
struct JOutOfRangeError : RootSystemError {
  JOutOfRangeError() : RootSystemError("j outside 1..n/2") {}
};

struct WeylElement {
  std::vector<std::vector<Rational>> matrix;  // action on t*-coordinates
  int sign;
};

/// Root data for one of the supported groups, in fixed coordinates:
///   A1: weight lattice Z in fundamental-weight units, root alpha = 2.
///   A2: fundamental-weight coordinates, alpha1=(2,-1), alpha2=(-1,2).
///   U2: t* = R^2 with the Euclidean form, root alpha = (1,-1).
class RootSystemData {
 public:
  static const RootSystemData& get(const std::string& name);

  const std::string& name() const { return name_; }
  int rankT() const { return rank_t_; }
  int m() const { return m_; }  // dim X* = number of simple roots
  const std::vector<IntVec>& simpleRoots() const { return simple_roots_; }
  const std::vector<IntVec>& positiveRoots() const { return positive_roots_; }
  const RatVec& rho() const { return rho_; }
  const std::vector<WeylElement>& weylElements() const { return weyl_; }

  /// W-invariant form on t*-coordinates.
  Rational inner(const RatVec& a, const RatVec& b) const;
  Rational innerInt(const IntVec& a, const IntVec& b) const;

  /// Integer basis of L* = X* cap I* expressed in t*-coordinates.
  const std::vector<IntVec>& basisXstar() const { return basis_xstar_; }

  /// Coordinates of a t*-vector in basisXstar; nullopt if not in the span
  /// or not integral.
  std::optional<IntVec> toXstarCoords(const IntVec& v) const;

  /// Positive roots in basisXstar coordinates (for pairings against X).
  const std::vector<IntVec>& positiveRootsXstar() const { return positive_roots_xstar_; }
  RatVec rhoXstar() const;  // rho in basisXstar coordinates (rational)

  bool isDominant(const IntVec& mu) const;
  IntVec applyWeyl(const WeylElement& w, const IntVec& mu) const;
  IntVec dominantize(const IntVec& mu) const;

  /// |Pi(G)| = index of the root lattice in L*.
  BigInt piGroupOrderG() const;

  /// Weyl dimension formula, exact.
  BigInt dimWeyl(const IntVec& mu) const;

  /// Product of 2 sinh(<alpha,tau>/2) over positive roots; tau is in X
  /// coordinates dual to basisXstar.
  double weylDenominator(const Vec& tau) const;

 private:
  std::string name_;
  int rank_t_ = 0, m_ = 0;
  std::vector<IntVec> simple_roots_, positive_roots_;
  RatVec rho_;
  std::vector<WeylElement> weyl_;
  std::vector<RatVec> gram_;
  std::vector<IntVec> basis_xstar_, positive_roots_xstar_;
};

/// Weights of V_lambda with exact multiplicities, and the shifted step set
/// S_lambda = M_lambda - lambda in basisXstar coordinates.
class WeightDiagram {
 public:
  WeightDiagram(const RootSystemData& root, IntVec lambda);

  const RootSystemData& root() const { return *root_; }
  const IntVec& lambda() const { return lambda_; }
  const std::vector<std::pair<IntVec, BigInt>>& entries() const { return entries_; }
  const BigInt& dimension() const { return dimension_; }
  BigInt multiplicity(const IntVec& mu) const;  // 0 if not a weight

  /// Center of mass of the diagram, t*-coordinates (zero for A1/A2).
  const RatVec& qStar() const { return q_star_; }

  /// Shifted step set; throws SpanDeficientError when lambda lies on a wall.
  const WeightedStepSet& stepSet() const;
  std::shared_ptr<const WeightedStepSet> stepSetPtr() const;

  /// lambda and nu in t*-coordinates -> gamma = nu - N lambda in
  /// basisXstar coordinates; nullopt when nu is not in the right coset.
  std::optional<IntVec> shiftCoords(long long n, const IntVec& nu) const;

 private:
  const RootSystemData* root_;
  IntVec lambda_;
  std::vector<std::pair<IntVec, BigInt>> entries_;
  std::map<IntVec, BigInt> by_weight_;
  BigInt dimension_;
  RatVec q_star_;
  std::shared_ptr<const WeightedStepSet> step_set_;  // null on a wall
};

WeightDiagram freudenthalDiagram(const RootSystemData& root, const IntVec& lambda);

/// Closed-form golden data for U(2), lambda with gap n: h, f, the solved
/// tau_j with f(tau_j) = -j, delta, A, and the prefactor a_lambda(j).
struct U2GoldenData {
  int n, j;
  double tau;          // scalar tau_j in the tau*alpha identification
  double delta;        // log h(tau) + 2 j tau
  double hessian;      // A(tau) in the tau variable
  double aLambda;      // prefactor from the closed form
  bool degenerate;     // n even, j = n/2

  // the same data in the lattice coordinate t = 2 tau used by the
  // generic pipeline (steps -j on Z)
  double tauGeneric;      // 2 tau
  double hessianGeneric;  // A / 2
  double genericPrefactor;  // |Pi| Delta e^{-<rho,tau>} / sqrt(hessianGeneric)
};

U2GoldenData u2Fixture(int n, int j);

}  // namespace latpath

#endif
