#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latpath/dual_solver.hpp"
#include "latpath/root_system.hpp"

#include <cmath>
#include <random>

using namespace latpath;

TEST_CASE("root system data") {
  const RootSystemData& a1 = RootSystemData::get("A1");
  CHECK(a1.positiveRoots() == std::vector<IntVec>{{2}});
  CHECK(a1.rho() == RatVec{Rational(1)});
  CHECK(a1.weylElements().size() == 2);
  CHECK(a1.innerInt({2}, {2}) == 2);

  const RootSystemData& a2 = RootSystemData::get("A2");
  CHECK(a2.weylElements().size() == 6);
  CHECK(a2.positiveRoots().size() == 3);
  CHECK(a2.rho() == RatVec{Rational(1), Rational(1)});
  CHECK(a2.innerInt({2, -1}, {2, -1}) == 2);
  CHECK(a2.innerInt({2, -1}, {-1, 2}) == -1);

  const RootSystemData& u2 = RootSystemData::get("U2");
  CHECK(u2.rho() == RatVec{Rational(1, 2), Rational(-1, 2)});
  CHECK(u2.positiveRoots() == std::vector<IntVec>{{1, -1}});
  CHECK(u2.weylElements().size() == 2);
  CHECK(u2.innerInt({1, -1}, {1, -1}) == 2);

  CHECK_THROWS_AS(RootSystemData::get("B2"), UnknownNameError);
}

TEST_CASE("Weyl invariance of the inner product") {
  for (const char* name : {"A1", "A2", "U2"}) {
    const RootSystemData& r = RootSystemData::get(name);
    std::mt19937 rng(3);
    std::uniform_int_distribution<long long> c(-4, 4);
    for (int t = 0; t < 20; ++t) {
      IntVec a(r.rankT()), b(r.rankT());
      for (auto& v : a) v = c(rng);
      for (auto& v : b) v = c(rng);
      for (const auto& w : r.weylElements())
        CHECK(r.innerInt(r.applyWeyl(w, a), r.applyWeyl(w, b)) == r.innerInt(a, b));
    }
  }
}

TEST_CASE("pi group orders") {
  CHECK(RootSystemData::get("A1").piGroupOrderG() == 2);
  CHECK(RootSystemData::get("A2").piGroupOrderG() == 3);
  CHECK(RootSystemData::get("U2").piGroupOrderG() == 1);
}

TEST_CASE("Weyl dimension formula") {
  const RootSystemData& a1 = RootSystemData::get("A1");
  for (long long k = 0; k <= 6; ++k) CHECK(a1.dimWeyl({k}) == k + 1);
  CHECK(RootSystemData::get("A2").dimWeyl({1, 1}) == 8);
  CHECK(RootSystemData::get("U2").dimWeyl({3, 0}) == 4);
  CHECK_THROWS_AS(RootSystemData::get("U2").dimWeyl({0, 3}), NotDominantError);
}

TEST_CASE("Weyl denominator") {
  const RootSystemData& u2 = RootSystemData::get("U2");
  // the point tau*alpha corresponds to dual coordinate 2*tau
  CHECK(u2.weylDenominator({2.0}) == doctest::Approx(2 * std::sinh(1.0)).epsilon(1e-14));
  CHECK(u2.weylDenominator({0.0}) == doctest::Approx(0.0));

  const RootSystemData& a2 = RootSystemData::get("A2");
  // tau=(1,1) pairs to 1 with both simple roots, 2 with their sum
  double expected = std::pow(2 * std::sinh(0.5), 2) * (2 * std::sinh(1.0));
  CHECK(a2.weylDenominator({1.0, 1.0}) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(RootSystemData::get("A1").weylDenominator({0.0}) == doctest::Approx(0.0));
}

TEST_CASE("Freudenthal diagrams") {
  WeightDiagram u2d(RootSystemData::get("U2"), {3, 0});
  CHECK(u2d.dimension() == 4);
  for (long long j = 0; j <= 3; ++j)
    CHECK(u2d.multiplicity({3 - j, j}) == 1);
  CHECK(u2d.multiplicity({4, -1}) == 0);

  WeightDiagram adjoint(RootSystemData::get("A1"), {2});
  CHECK(adjoint.dimension() == 3);
  for (long long mu : {-2, 0, 2}) CHECK(adjoint.multiplicity({mu}) == 1);
  CHECK(adjoint.multiplicity({1}) == 0);

  WeightDiagram a2rho(RootSystemData::get("A2"), {1, 1});
  CHECK(a2rho.dimension() == 8);
  CHECK(a2rho.multiplicity({0, 0}) == 2);
  CHECK(a2rho.multiplicity({1, 1}) == 1);

  CHECK_THROWS_AS(WeightDiagram(RootSystemData::get("A1"), {-1}), NotDominantError);
}

TEST_CASE("U2 diagram matches the Schur expansion for all n <= 10") {
  const RootSystemData& u2 = RootSystemData::get("U2");
  for (long long n = 1; n <= 10; ++n) {
    WeightDiagram d(u2, {n, 0});
    CHECK(d.dimension() == n + 1);
    for (long long j = 0; j <= n; ++j) CHECK(d.multiplicity({n - j, j}) == 1);
    CHECK(static_cast<long long>(d.entries().size()) == n + 1);
  }
}

TEST_CASE("diagram dimension equals Weyl dimension") {
  std::vector<std::pair<std::string, IntVec>> cases = {
      {"A1", {5}}, {"A2", {2, 1}}, {"A2", {3, 0}}, {"U2", {4, 1}}};
  for (const auto& [name, lambda] : cases) {
    const RootSystemData& r = RootSystemData::get(name);
    WeightDiagram d(r, lambda);
    CHECK(d.dimension() == r.dimWeyl(lambda));
    BigInt sum = 0;
    for (const auto& [mu, m] : d.entries()) {
      sum += m;
      CHECK(m == d.multiplicity(r.dominantize(mu)));  // W-invariance
    }
    CHECK(sum == d.dimension());
  }
}

TEST_CASE("extreme weights have multiplicity one") {
  const RootSystemData& a2 = RootSystemData::get("A2");
  WeightDiagram d(a2, {3, 1});
  for (const auto& w : a2.weylElements())
    CHECK(d.multiplicity(a2.applyWeyl(w, {3, 1})) == 1);
}

TEST_CASE("center of mass of semisimple diagrams vanishes") {
  for (const auto& [name, lambda] :
       std::vector<std::pair<std::string, IntVec>>{
           {"A1", {1}}, {"A1", {2}}, {"A1", {7}}, {"A2", {1, 1}}, {"A2", {2, 1}},
           {"A2", {4, 0}}}) {
    WeightDiagram d(RootSystemData::get(name), lambda);
    for (const auto& q : d.qStar()) CHECK(q == 0);
  }
  // non-semisimple U(2) has a nonzero center
  WeightDiagram u2d(RootSystemData::get("U2"), {3, 0});
  CHECK(u2d.qStar() == RatVec{Rational(3, 2), Rational(3, 2)});
}

TEST_CASE("wall weights build a diagram but no step set") {
  WeightDiagram wall(RootSystemData::get("U2"), {2, 2});
  CHECK(wall.dimension() == 1);
  CHECK_THROWS_AS(wall.stepSet(), SpanDeficientError);
  WeightDiagram zero(RootSystemData::get("A1"), {0});
  CHECK_THROWS_AS(zero.stepSet(), SpanDeficientError);
}

TEST_CASE("diagram step sets have the group Pi order") {
  std::mt19937 rng(77);
  auto randLambda = [&](const RootSystemData& r) {
    std::uniform_int_distribution<long long> c(1, 4);
    if (r.name() == "A1") return IntVec{c(rng)};
    if (r.name() == "A2") return IntVec{c(rng), c(rng)};
    long long hi = c(rng), gap = c(rng);
    return IntVec{hi + gap, hi};  // open chamber for U2
  };
  for (const char* name : {"A1", "A2", "U2"}) {
    const RootSystemData& r = RootSystemData::get(name);
    for (int t = 0; t < 5; ++t) {
      WeightDiagram d(r, randLambda(r));
      CHECK(d.stepSet().piOrder() == r.piGroupOrderG());
    }
  }
}

TEST_CASE("character consistency of diagram and step set") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> tauDist(-0.8, 0.8);
  for (const auto& [name, lambda] :
       std::vector<std::pair<std::string, IntVec>>{
           {"A1", {2}}, {"A2", {2, 1}}, {"U2", {3, 0}}}) {
    const RootSystemData& r = RootSystemData::get(name);
    WeightDiagram d(r, lambda);
    const WeightedStepSet& s = d.stepSet();
    for (int t = 0; t < 10; ++t) {
      Vec tau(r.m());
      for (auto& v : tau) v = tauDist(rng);
      // character sum over the diagram, in X* coordinates shifted by lambda
      double direct = 0;
      for (const auto& [mu, m] : d.entries()) {
        IntVec diff(r.rankT());
        for (int i = 0; i < r.rankT(); ++i) diff[i] = mu[i] - lambda[i];
        auto dx = r.toXstarCoords(diff);
        REQUIRE(dx.has_value());
        double e = 0;
        for (int i = 0; i < r.m(); ++i) e += (*dx)[i] * tau[i];
        direct += static_cast<double>(m.convert_to<double>()) * std::exp(e);
      }
      double viaStepSet = evalCharacter(s, tau).value;
      CHECK(direct == doctest::Approx(viaStepSet).epsilon(1e-12));
    }
  }
}

TEST_CASE("u2 fixture closed forms") {
  CHECK_THROWS_AS(u2Fixture(3, 0), JOutOfRangeError);
  CHECK_THROWS_AS(u2Fixture(3, 2), JOutOfRangeError);

  U2GoldenData g = u2Fixture(3, 1);
  CHECK_FALSE(g.degenerate);
  CHECK(g.tau > 0);
  CHECK(g.aLambda > 0);

  U2GoldenData deg = u2Fixture(2, 1);
  CHECK(deg.degenerate);
  CHECK(deg.tau == 0);
  CHECK(deg.aLambda == 0);
}

TEST_CASE("u2 fixture agrees with the generic pipeline") {
  for (int n = 2; n <= 5; ++n) {
    WeightDiagram d(RootSystemData::get("U2"), {n, 0});
    const WeightedStepSet& s = d.stepSet();
    for (int j = 1; 2 * j <= n; ++j) {
      U2GoldenData g = u2Fixture(n, j);
      DualPoint dp = invertMomentMap(s, {-double(j)}, 1e-13);
      CHECK(std::fabs(dp.tau[0] - g.tauGeneric) <= 1e-9);
      CHECK(std::fabs(dp.delta - g.delta) <= 1e-9);
      CHECK(std::fabs(dp.hessian[0][0] - g.hessianGeneric) <= 1e-9);
    }
  }
}
