#include "latpath/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace latpath {

namespace {

// Solve sum_k c_k basis[k] = v over the rationals; nullopt if inconsistent.
std::optional<RatVec> solveInBasis(const std::vector<IntVec>& basis, const RatVec& v) {
  const int rows = static_cast<int>(v.size());
  const int cols = static_cast<int>(basis.size());
  std::vector<RatVec> a(rows, RatVec(cols + 1, 0));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) a[r][c] = basis[c][r];
    a[r][cols] = v[r];
  }
  int rank = 0;
  std::vector<int> pivCol;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    Rational d = a[rank][c];
    for (auto& e : a[rank]) e /= d;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int cc = 0; cc <= cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    pivCol.push_back(c);
    ++rank;
  }
  for (int r = rank; r < rows; ++r)
    if (a[r][cols] != 0) return std::nullopt;
  RatVec c(cols, 0);
  for (int r = 0; r < rank; ++r) c[pivCol[r]] = a[r][cols];
  return c;
}

std::vector<std::vector<Rational>> matMul(const std::vector<std::vector<Rational>>& a,
                                          const std::vector<std::vector<Rational>>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

std::vector<WeylElement> generateWeyl(const std::vector<WeylElement>& gens, int n) {
  std::vector<std::vector<Rational>> id(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i) id[i][i] = 1;
  std::vector<WeylElement> out{{id, 1}};
  std::set<std::vector<std::vector<Rational>>> seen{id};
  std::deque<WeylElement> queue{out.front()};
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      WeylElement next{matMul(g.matrix, w.matrix), g.sign * w.sign};
      if (seen.insert(next.matrix).second) {
        out.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return out;
}

}  // namespace

Rational RootSystemData::inner(const RatVec& a, const RatVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_t_; ++i)
    for (int j = 0; j < rank_t_; ++j) s += a[i] * gram_[i][j] * b[j];
  return s;
}

Rational RootSystemData::innerInt(const IntVec& a, const IntVec& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_t_; ++i)
    for (int j = 0; j < rank_t_; ++j) s += Rational(a[i]) * gram_[i][j] * b[j];
  return s;
}

std::optional<IntVec> RootSystemData::toXstarCoords(const IntVec& v) const {
  RatVec rv(v.begin(), v.end());
  auto c = solveInBasis(basis_xstar_, rv);
  if (!c) return std::nullopt;
  IntVec out(c->size());
  for (size_t i = 0; i < c->size(); ++i) {
    if (boost::multiprecision::denominator((*c)[i]) != 1) return std::nullopt;
    out[i] = static_cast<long long>(BigInt(boost::multiprecision::numerator((*c)[i])));
  }
  return out;
}

RatVec RootSystemData::rhoXstar() const {
  auto c = solveInBasis(basis_xstar_, rho_);
  return *c;
}

bool RootSystemData::isDominant(const IntVec& mu) const {
  for (const auto& alpha : simple_roots_)
    if (innerInt(mu, alpha) < 0) return false;
  return true;
}

IntVec RootSystemData::applyWeyl(const WeylElement& w, const IntVec& mu) const {
  IntVec out(rank_t_, 0);
  for (int i = 0; i < rank_t_; ++i) {
    Rational s = 0;
    for (int j = 0; j < rank_t_; ++j) s += w.matrix[i][j] * mu[j];
    out[i] = static_cast<long long>(BigInt(boost::multiprecision::numerator(s)));
  }
  return out;
}

IntVec RootSystemData::dominantize(const IntVec& mu) const {
  for (const auto& w : weyl_) {
    IntVec img = applyWeyl(w, mu);
    if (isDominant(img)) return img;
  }
  throw RootSystemError("no dominant Weyl image found");  // unreachable
}

BigInt RootSystemData::piGroupOrderG() const {
  std::vector<std::vector<BigInt>> gens;
  for (const auto& alpha : positive_roots_xstar_)
    gens.emplace_back(alpha.begin(), alpha.end());
  auto h = hermiteBasis(m_, gens);
  if (!h) throw RootSystemError("root lattice rank deficient");
  return latticeIndex(*h);
}

BigInt RootSystemData::dimWeyl(const IntVec& mu) const {
  if (!isDominant(mu)) throw NotDominantError();
  RatVec muRho(rank_t_);
  for (int i = 0; i < rank_t_; ++i) muRho[i] = Rational(mu[i]) + rho_[i];
  Rational prod = 1;
  for (const auto& alpha : positive_roots_) {
    RatVec ar(alpha.begin(), alpha.end());
    prod *= inner(muRho, ar) / inner(rho_, ar);
  }
  if (boost::multiprecision::denominator(prod) != 1)
    throw RootSystemError("Weyl dimension is not an integer");
  return BigInt(boost::multiprecision::numerator(prod));
}

double RootSystemData::weylDenominator(const Vec& tau) const {
  double prod = 1;
  for (const auto& alpha : positive_roots_xstar_) {
    double pairing = 0;
    for (int i = 0; i < m_; ++i) pairing += alpha[i] * tau[i];
    prod *= 2 * std::sinh(pairing / 2);
  }
  return prod;
}

const RootSystemData& RootSystemData::get(const std::string& name) {
  static std::map<std::string, RootSystemData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  RootSystemData r;
  r.name_ = name;
  if (name == "A1") {
    r.rank_t_ = 1;
    r.m_ = 1;
    r.simple_roots_ = {{2}};
    r.positive_roots_ = {{2}};
    r.rho_ = {Rational(1)};
    r.gram_ = {{Rational(1, 2)}};
    r.basis_xstar_ = {{1}};
    WeylElement flip{{{Rational(-1)}}, -1};
    r.weyl_ = generateWeyl({flip}, 1);
  } else if (name == "A2") {
    r.rank_t_ = 2;
    r.m_ = 2;
    r.simple_roots_ = {{2, -1}, {-1, 2}};
    r.positive_roots_ = {{2, -1}, {-1, 2}, {1, 1}};
    r.rho_ = {Rational(1), Rational(1)};
    r.gram_ = {{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};
    r.basis_xstar_ = {{1, 0}, {0, 1}};
    // s_i(mu) = mu - <mu, alpha_i^vee> alpha_i in fundamental-weight coords
    WeylElement s1{{{Rational(-1), Rational(0)}, {Rational(1), Rational(1)}}, -1};
    WeylElement s2{{{Rational(1), Rational(1)}, {Rational(0), Rational(-1)}}, -1};
    r.weyl_ = generateWeyl({s1, s2}, 2);
    if (r.weyl_.size() != 6) throw RootSystemError("A2 Weyl group generation failed");
  } else if (name == "U2") {
    r.rank_t_ = 2;
    r.m_ = 1;
    r.simple_roots_ = {{1, -1}};
    r.positive_roots_ = {{1, -1}};
    r.rho_ = {Rational(1, 2), Rational(-1, 2)};
    r.gram_ = {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    r.basis_xstar_ = {{1, -1}};
    WeylElement swap{{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}, -1};
    r.weyl_ = generateWeyl({swap}, 2);
  } else {
    throw UnknownNameError(name);
  }
  for (const auto& alpha : r.positive_roots_) {
    auto c = r.toXstarCoords(alpha);
    if (!c) throw RootSystemError("root outside X* lattice basis");
    r.positive_roots_xstar_.push_back(*c);
  }
  return cache.emplace(name, std::move(r)).first->second;
}

WeightDiagram::WeightDiagram(const RootSystemData& root, IntVec lambda)
    : root_(&root), lambda_(std::move(lambda)) {
  const int rt = root.rankT();
  if (static_cast<int>(lambda_.size()) != rt) throw DimensionMismatchError();
  if (!root.isDominant(lambda_)) throw NotDominantError();

  const Rational lamNorm = root.innerInt(lambda_, lambda_);
  RatVec lamRho(rt);
  for (int i = 0; i < rt; ++i) lamRho[i] = Rational(lambda_[i]) + root.rho()[i];
  const Rational lamRhoNorm = root.inner(lamRho, lamRho);

  // simple roots expressed in the X* basis, for the root-cone test
  std::vector<IntVec> simpleX;
  for (const auto& alpha : root.simpleRoots()) simpleX.push_back(*root.toXstarCoords(alpha));

  auto inRootCone = [&](const IntVec& mu) {
    IntVec d(rt);
    for (int i = 0; i < rt; ++i) d[i] = lambda_[i] - mu[i];
    auto dx = root.toXstarCoords(d);
    if (!dx) return false;
    RatVec rv(dx->begin(), dx->end());
    auto c = solveInBasis(simpleX, rv);
    if (!c) return false;
    for (const auto& e : *c)
      if (e < 0 || boost::multiprecision::denominator(e) != 1) return false;
    return true;
  };

  std::map<IntVec, BigInt> memo;
  auto mult = [&](auto&& self, const IntVec& mu) -> BigInt {
    if (mu == lambda_) return 1;
    auto it = memo.find(mu);
    if (it != memo.end()) return it->second;
    BigInt result = 0;
    if (inRootCone(mu)) {
      RatVec muRho(rt);
      for (int i = 0; i < rt; ++i) muRho[i] = Rational(mu[i]) + root.rho()[i];
      Rational denom = lamRhoNorm - root.inner(muRho, muRho);
      if (denom > 0) {
        Rational sum = 0;
        for (const auto& alpha : root.positiveRoots()) {
          for (long long k = 1;; ++k) {
            IntVec nu(rt);
            for (int i = 0; i < rt; ++i) nu[i] = mu[i] + k * alpha[i];
            if (root.innerInt(nu, nu) > lamNorm) break;
            BigInt mnu = self(self, root.dominantize(nu));
            if (mnu != 0) sum += Rational(mnu) * root.innerInt(nu, alpha);
          }
        }
        Rational value = 2 * sum / denom;
        if (boost::multiprecision::denominator(value) != 1)
          throw RootSystemError("Freudenthal recursion produced a non-integer");
        result = BigInt(boost::multiprecision::numerator(value));
      }
    }
    memo.emplace(mu, result);
    return result;
  };

  // breadth-first sweep of candidate weights below lambda
  std::set<IntVec> visited{lambda_};
  std::deque<IntVec> queue{lambda_};
  std::vector<IntVec> candidates;
  while (!queue.empty()) {
    IntVec mu = queue.front();
    queue.pop_front();
    candidates.push_back(mu);
    for (const auto& alpha : root.simpleRoots()) {
      IntVec next(rt);
      for (int i = 0; i < rt; ++i) next[i] = mu[i] - alpha[i];
      if (root.innerInt(next, next) > lamNorm) continue;
      if (visited.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  dimension_ = 0;
  q_star_.assign(rt, 0);
  for (const auto& mu : candidates) {
    BigInt mv = mult(mult, root.dominantize(mu));
    if (mv == 0) continue;
    entries_.emplace_back(mu, mv);
    by_weight_.emplace(mu, mv);
    dimension_ += mv;
    for (int i = 0; i < rt; ++i) q_star_[i] += Rational(mv) * mu[i];
  }
  for (auto& e : q_star_) e /= Rational(dimension_);

  // shifted step set S_lambda in X* coordinates
  std::vector<IntVec> steps;
  RatVec weights;
  for (const auto& [mu, mv] : entries_) {
    IntVec d(rt);
    for (int i = 0; i < rt; ++i) d[i] = mu[i] - lambda_[i];
    auto dx = root.toXstarCoords(d);
    if (!dx) throw RootSystemError("weight shift outside X* lattice");
    steps.push_back(*dx);
    weights.emplace_back(mv);
  }
  try {
    step_set_ = std::make_shared<const WeightedStepSet>(root.m(), std::move(steps),
                                                        std::move(weights));
  } catch (const StepSetError&) {
    step_set_ = nullptr;  // lambda on a wall: too few steps or span-deficient
  }
}

BigInt WeightDiagram::multiplicity(const IntVec& mu) const {
  auto it = by_weight_.find(mu);
  return it == by_weight_.end() ? BigInt(0) : it->second;
}

const WeightedStepSet& WeightDiagram::stepSet() const {
  if (!step_set_) throw SpanDeficientError();
  return *step_set_;
}

std::shared_ptr<const WeightedStepSet> WeightDiagram::stepSetPtr() const {
  if (!step_set_) throw SpanDeficientError();
  return step_set_;
}

std::optional<IntVec> WeightDiagram::shiftCoords(long long n, const IntVec& nu) const {
  const int rt = root_->rankT();
  if (static_cast<int>(nu.size()) != rt) throw DimensionMismatchError();
  IntVec d(rt);
  for (int i = 0; i < rt; ++i) d[i] = nu[i] - n * lambda_[i];
  return root_->toXstarCoords(d);
}

WeightDiagram freudenthalDiagram(const RootSystemData& root, const IntVec& lambda) {
  return WeightDiagram(root, lambda);
}

namespace {

double u2H(int n, double tau) {
  double s = 0;
  for (int k = 0; k <= n; ++k) s += std::exp(-2.0 * k * tau);
  return s;
}

double u2F(int n, double tau) {
  double num = 0, den = 0;
  for (int k = 0; k <= n; ++k) {
    double e = std::exp(-2.0 * k * tau);
    num += k * e;
    den += e;
  }
  return -num / den;
}

double u2A(int n, double tau) {
  double m0 = 0, m1 = 0, m2 = 0;
  for (int k = 0; k <= n; ++k) {
    double e = std::exp(-2.0 * k * tau);
    m0 += e;
    m1 += k * e;
    m2 += double(k) * k * e;
  }
  double mean = m1 / m0;
  return 2 * (m2 / m0 - mean * mean);  // (h h'' - h'^2) / (2 h^2)
}

}  // namespace

U2GoldenData u2Fixture(int n, int j) {
  if (n < 1 || j < 1 || 2 * j > n) throw JOutOfRangeError();
  U2GoldenData g;
  g.n = n;
  g.j = j;
  g.degenerate = (n % 2 == 0 && 2 * j == n);

  if (g.degenerate) {
    g.tau = 0;
  } else {
    // f is increasing on [0, inf) from -n/2 toward 0; solve f(tau) = -j
    double lo = 0, hi = 1;
    while (u2F(n, hi) < -double(j)) hi *= 2;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      (u2F(n, mid) < -double(j) ? lo : hi) = mid;
    }
    g.tau = 0.5 * (lo + hi);
  }

  g.delta = std::log(u2H(n, g.tau)) + 2.0 * j * g.tau;
  g.hessian = u2A(n, g.tau);
  if (g.degenerate) {
    g.aLambda = 0;
  } else {
    double sh = std::sinh(g.tau), shn = std::sinh((n + 1.0) * g.tau);
    double d = shn * shn - (n + 1.0) * (n + 1.0) * sh * sh;
    g.aLambda = 2 * std::exp(-g.tau) * std::sqrt(2 * sh * sh * sh * sh * shn * shn / d);
  }

  g.tauGeneric = 2 * g.tau;
  g.hessianGeneric = g.hessian / 2;
  g.genericPrefactor =
      g.degenerate ? 0
                   : 2 * std::sinh(g.tau) * std::exp(-g.tau) / std::sqrt(g.hessianGeneric);
  return g;
}

}  // namespace latpath
