#include "latpath/simplex.hpp"

#include <cassert>

namespace latpath {

namespace {

// Dense simplex tableau over exact rationals.
// Rows 0..m-1: constraints; row m: objective (reduced costs, maximization).
struct Tableau {
  int m, n;  // constraints, variables (incl. artificials)
  std::vector<RatVec> t;  // (m+1) x (n+1), last column = rhs
  std::vector<int> basis;  // basic variable per row

  void pivot(int row, int col) {
    Rational p = t[row][col];
    for (auto& e : t[row]) e /= p;
    for (int r = 0; r <= m; ++r) {
      if (r == row || t[r][col] == 0) continue;
      Rational f = t[r][col];
      for (int cIdx = 0; cIdx <= n; ++cIdx) t[r][cIdx] -= f * t[row][cIdx];
    }
    basis[row] = col;
  }

  // Bland's rule: entering = lowest-index variable with positive reduced
  // cost; leaving = lowest-index basic variable among min-ratio rows.
  // Returns Optimal or Unbounded.
  LpResult::Status run(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < n; ++j) {
        if (allowed[j] && t[m][j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return LpResult::Status::Optimal;
      int leave = -1;
      Rational bestRatio;
      for (int r = 0; r < m; ++r) {
        if (t[r][enter] <= 0) continue;
        Rational ratio = t[r][n] / t[r][enter];
        if (leave < 0 || ratio < bestRatio ||
            (ratio == bestRatio && basis[r] < basis[leave])) {
          leave = r;
          bestRatio = ratio;
        }
      }
      if (leave < 0) return LpResult::Status::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solveLp(const std::vector<RatVec>& a, const RatVec& b, const RatVec& c) {
  const int m = static_cast<int>(a.size());
  const int nVars = static_cast<int>(c.size());
  const int n = nVars + m;  // plus one artificial per row

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(m + 1, RatVec(n + 1, 0));
  tab.basis.assign(m, 0);

  for (int r = 0; r < m; ++r) {
    int sign = (b[r] < 0) ? -1 : 1;
    for (int j = 0; j < nVars; ++j) tab.t[r][j] = sign * a[r][j];
    tab.t[r][nVars + r] = 1;
    tab.t[r][n] = sign * b[r];
    tab.basis[r] = nVars + r;
  }

  // phase 1: maximize -sum(artificials)
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j) tab.t[m][j] += tab.t[r][j];
  for (int r = 0; r < m; ++r) tab.t[m][nVars + r] = 0;

  std::vector<bool> allowAll(n, true);
  tab.run(allowAll);
  if (tab.t[m][n] != 0) return {LpResult::Status::Infeasible, 0, {}};

  // drive any artificial still basic (at value 0) out of the basis
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < nVars) continue;
    int enter = -1;
    for (int j = 0; j < nVars; ++j) {
      if (tab.t[r][j] != 0) {
        enter = j;
        break;
      }
    }
    if (enter >= 0) tab.pivot(r, enter);
    // a row with no real-variable entry is a redundant constraint; leave it
  }

  // phase 2: real objective, artificials barred
  for (int j = 0; j <= n; ++j) tab.t[m][j] = 0;
  for (int j = 0; j < nVars; ++j) tab.t[m][j] = c[j];
  for (int r = 0; r < m; ++r) {
    if (tab.basis[r] < nVars && tab.t[m][tab.basis[r]] != 0) {
      Rational f = tab.t[m][tab.basis[r]];
      for (int j = 0; j <= n; ++j) tab.t[m][j] -= f * tab.t[r][j];
    }
  }
  std::vector<bool> allowReal(n, false);
  for (int j = 0; j < nVars; ++j) allowReal[j] = true;

  auto status = tab.run(allowReal);
  if (status == LpResult::Status::Unbounded) return {status, 0, {}};

  LpResult res;
  res.status = LpResult::Status::Optimal;
  res.solution.assign(nVars, 0);
  for (int r = 0; r < m; ++r)
    if (tab.basis[r] < nVars) res.solution[tab.basis[r]] = tab.t[r][n];
  res.objective = -tab.t[m][n];
  return res;
}

}  // namespace latpath
