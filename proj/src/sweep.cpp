#include "latpath/sweep.hpp"

#include "latpath/dual_solver.hpp"
#include "latpath/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latpath {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string joinInts(const IntVec& v, char sep = ' ') {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

bool has(const std::vector<std::string>& list, const std::string& name) {
  return std::find(list.begin(), list.end(), name) != list.end();
}

struct Cell {
  std::string value;  // empty = missing
};

struct Table {
  std::vector<std::string> meta;     // '#'-prefixed lines (without the '#')
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void writeOutput(const Table& t, const std::string& path, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") {
    for (const auto& m : t.meta) out << "# " << m << "\n";
    for (size_t i = 0; i < t.columns.size(); ++i)
      out << (i ? "," : "") << t.columns[i];
    out << "\n";
    for (const auto& row : t.rows) {
      for (size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << row[i].value;
      out << "\n";
    }
  } else if (format == "json") {
    out << "{\n  \"meta\": [";
    for (size_t i = 0; i < t.meta.size(); ++i)
      out << (i ? ", " : "") << '"' << t.meta[i] << '"';
    out << "],\n  \"columns\": [";
    for (size_t i = 0; i < t.columns.size(); ++i)
      out << (i ? ", " : "") << '"' << t.columns[i] << '"';
    out << "],\n  \"rows\": [\n";
    for (size_t r = 0; r < t.rows.size(); ++r) {
      out << "    [";
      for (size_t i = 0; i < t.rows[r].size(); ++i) {
        out << (i ? ", " : "");
        if (t.rows[r][i].value.empty())
          out << "null";
        else
          out << '"' << t.rows[r][i].value << '"';
      }
      out << (r + 1 < t.rows.size() ? "],\n" : "]\n");
    }
    out << "  ]\n}\n";
  } else {
    throw std::runtime_error("unknown output format: " + format);
  }

  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + tmp);
    f << out.str();
    if (!f) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot move output into place: " + path);
  }
}

struct ResolvedSource {
  std::shared_ptr<const WeightedStepSet> stepSet;
  std::optional<WeightDiagram> diagram;
};

ResolvedSource resolveSource(const SweepSource& src) {
  ResolvedSource out;
  if (!src.stepsFile.empty()) {
    out.stepSet = std::make_shared<const WeightedStepSet>(readStepSetJson(src.stepsFile));
  } else if (!src.group.empty()) {
    out.diagram.emplace(RootSystemData::get(src.group), src.lambda);
    out.stepSet = out.diagram->stepSetPtr();
  } else {
    throw std::runtime_error("no source: give --steps or --group/--lambda");
  }
  return out;
}

std::vector<IntVec> gridTargets(const WeightedStepSet& s, long long n, double radius) {
  const int m = s.dim();
  Vec com = centerOfMass(s);
  double r = radius * std::sqrt(double(n));
  IntVec lo(m), hi(m);
  for (int i = 0; i < m; ++i) {
    lo[i] = static_cast<long long>(std::ceil(n * com[i] - r));
    hi[i] = static_cast<long long>(std::floor(n * com[i] + r));
  }
  std::vector<IntVec> out;
  IntVec g(lo);
  for (;;) {
    double d2 = 0;
    for (int i = 0; i < m; ++i) {
      double d = g[i] - n * com[i];
      d2 += d * d;
    }
    if (d2 <= r * r && s.supportTest(n, g)) out.push_back(g);
    int k = m - 1;
    while (k >= 0 && g[k] == hi[k]) {
      g[k] = lo[k];
      --k;
    }
    if (k < 0) break;
    ++g[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int runCompare(const SweepSpec& spec) {
  try {
#ifdef _OPENMP
    if (spec.threads > 0) omp_set_num_threads(spec.threads);
#endif
    if (spec.nList.empty()) throw std::runtime_error("empty --N list");
    if (spec.estimators.empty()) throw std::runtime_error("no estimators selected");
    if (!std::is_sorted(spec.nList.begin(), spec.nList.end()))
      throw std::runtime_error("--N list must be ascending");

    ResolvedSource src = resolveSource(spec.source);
    const WeightedStepSet& s = *src.stepSet;
    CountOptions copts;
    copts.memCapCells = spec.memCapCells;

    const bool irredSD = has(spec.estimators, "irredSD");
    const bool irredCL = has(spec.estimators, "irredCL");
    const bool pathMode = !(irredSD || irredCL);
    if ((irredSD || irredCL) && !src.diagram)
      throw std::runtime_error("irreducible estimators need --group/--lambda");
    if ((irredSD || irredCL) &&
        (has(spec.estimators, "CL") || has(spec.estimators, "MD") ||
         has(spec.estimators, "SD")))
      throw std::runtime_error("cannot mix irreducible and lattice-path estimators");
    const bool wantExact = has(spec.estimators, "exact");

    Table t;
    t.meta.push_back("latpath compare v1.0");
    t.meta.push_back("source: " + (spec.source.stepsFile.empty()
                                       ? spec.source.group + " lambda=" +
                                             joinInts(spec.source.lambda, ',')
                                       : spec.source.stepsFile));
    {
      std::string es;
      for (const auto& e : spec.estimators) es += (es.empty() ? "" : ",") + e;
      t.meta.push_back("estimators: " + es);
    }
    t.meta.push_back("cl-cut: " + fmt(spec.thresholds.clCut) +
                     " md-smax: " + fmt(spec.thresholds.mdSmax) + " tol: " + fmt(spec.tol));
    t.meta.push_back("conventions: natural logs; lattice coordinates of the step set");

    const int coordDim = pathMode ? s.dim() : src.diagram->root().rankT();
    t.columns.push_back("N");
    for (int i = 0; i < coordDim; ++i) t.columns.push_back("g" + std::to_string(i));
    t.columns.push_back("regime");
    t.columns.push_back("support_flag");
    if (wantExact) t.columns.push_back("log_exact");
    for (const auto& e : spec.estimators) {
      if (e == "exact") continue;
      t.columns.push_back("log_" + e);
      if (wantExact) t.columns.push_back("ratio_" + e);
    }

    for (long long n : spec.nList) {
      std::vector<IntVec> targets;
      if (spec.gridRadius) {
        if (!pathMode) throw std::runtime_error("--grid-radius needs lattice-path mode");
        targets = gridTargets(s, n, *spec.gridRadius);
      } else if (spec.ray) {
        IntVec g(s.dim());
        for (int i = 0; i < s.dim(); ++i)
          g[i] = n * spec.ray->first[i] + spec.ray->second[i];
        targets.push_back(g);
      } else {
        targets = spec.targets;
      }
      if (targets.empty()) throw std::runtime_error("no targets for N=" + std::to_string(n));

      std::optional<CoefficientTable> table;
      if (wantExact) table.emplace(countPaths(s, n, copts));

      for (const auto& target : targets) {
        std::vector<Cell> row;
        row.push_back({std::to_string(n)});
        for (long long c : target) row.push_back({std::to_string(c)});

        bool support = true;
        std::string regime;
        std::string logExact;
        std::vector<std::pair<std::string, std::string>> ests;  // name -> log value

        if (pathMode) {
          support = s.supportTest(n, target);
          regime = regimeName(classifyRegime(s, target, n, spec.thresholds).regime);
          if (support && wantExact) {
            double lv = table->logValue(target);
            if (std::isfinite(lv)) logExact = fmt(lv);
          }
          for (const auto& e : spec.estimators) {
            if (e == "exact") continue;
            std::string v;
            if (support) {
              try {
                if (e == "CL") v = fmt(estimateCentralLimit(s, target, n).logValue);
                else if (e == "MD")
                  v = fmt(estimateModerateDeviation(s, target, n, spec.tol).logValue);
                else if (e == "SD") {
                  IntVec alpha = spec.ray ? spec.ray->first : IntVec();
                  IntVec f = spec.ray ? spec.ray->second : IntVec();
                  if (!spec.ray) throw std::runtime_error("SD estimator needs --ray");
                  v = fmt(estimateStrongDeviation(s, alpha, f, n, spec.tol).logValue);
                } else if (e == "rate") {
                  Vec x(s.dim());
                  for (int i = 0; i < s.dim(); ++i) x[i] = double(target[i]) / n;
                  v = fmt(rateFunction(s, x));
                } else {
                  throw std::runtime_error("unknown estimator: " + e);
                }
              } catch (const AsymptoticsError&) {
              } catch (const DualSolverError&) {
              }
            }
            ests.emplace_back(e, v);
          }
        } else {
          const WeightDiagram& d = *src.diagram;
          regime = irredSD ? "IRRED_SD" : "IRRED_CL";
          IntVec mu(coordDim);
          if (irredSD) {
            for (int i = 0; i < coordDim; ++i) mu[i] = n * target[i];  // a_N(lambda; N nu)
          } else {
            mu = target;
          }
          auto gamma = d.shiftCoords(n, mu);
          support = gamma && d.stepSet().supportTest(n, *gamma);
          if (support && wantExact) {
            BigInt a = irreducibleMultiplicity(d, *table, n, mu);
            if (a > 0) logExact = fmt(logBigInt(a));
            else support = false;
          }
          std::string v;
          if (support) {
            try {
              AsymptoticEstimate est = irredSD
                                           ? estimateIrreducibleSD(d, target, n, spec.tol)
                                           : estimateIrreducibleCL(d, target, n);
              if (std::isfinite(est.logValue)) v = fmt(est.logValue);
            } catch (const AsymptoticsError&) {
            } catch (const DualSolverError&) {
            } catch (const RootSystemError&) {
            }
          }
          ests.emplace_back(irredSD ? "irredSD" : "irredCL", v);
        }

        row.push_back({regime});
        row.push_back({support ? "true" : "false"});
        if (wantExact) row.push_back({logExact});
        for (const auto& [name, v] : ests) {
          row.push_back({v});
          if (wantExact) {
            std::string ratio;
            if (!v.empty() && !logExact.empty())
              ratio = fmt(std::exp(std::stod(v) - std::stod(logExact)));
            row.push_back({ratio});
          }
        }
        t.rows.push_back(std::move(row));
      }
    }

    writeOutput(t, spec.outPath, spec.format);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::remove((spec.outPath + ".tmp").c_str());
    return 1;
  }
}

int runRateProfile(const SweepSpec& spec, int gridPoints) {
  try {
    if (gridPoints < 2) throw std::runtime_error("grid points must be >= 2");
    ResolvedSource src = resolveSource(spec.source);
    const WeightedStepSet& s = *src.stepSet;
    const int m = s.dim();
    if (m > 2) throw std::runtime_error("rate profile supports dimension <= 2");

    Table t;
    t.meta.push_back("latpath rate-profile v1.0");
    {
      RatVec com = s.centerOfMass();
      std::string cs;
      for (size_t i = 0; i < com.size(); ++i)
        cs += (i ? "," : "") + rationalToString(com[i]);
      t.meta.push_back("center-of-mass: " + cs);
    }
    for (int i = 0; i < m; ++i) t.columns.push_back("x" + std::to_string(i));
    t.columns.push_back("rate");
    t.columns.push_back("delta");
    t.columns.push_back("det_hessian");
    const bool empirical = !spec.nList.empty() && has(spec.estimators, "exact");
    long long nEmp = empirical ? spec.nList.front() : 0;
    std::optional<CoefficientTable> table;
    if (empirical) {
      CountOptions copts;
      copts.memCapCells = spec.memCapCells;
      table.emplace(countPaths(s, nEmp, copts));
      t.columns.push_back("empirical_rate_N" + std::to_string(nEmp));
    }

    IntVec lo(m), hi(m);
    for (int i = 0; i < m; ++i) {
      lo[i] = hi[i] = s.steps()[0][i];
      for (const auto& b : s.steps()) {
        lo[i] = std::min(lo[i], b[i]);
        hi[i] = std::max(hi[i], b[i]);
      }
    }

    std::vector<Vec> grid;
    if (m == 1) {
      for (int i = 1; i <= gridPoints; ++i)
        grid.push_back({lo[0] + (hi[0] - lo[0]) * double(i) / (gridPoints + 1)});
    } else {
      for (int i = 1; i <= gridPoints; ++i)
        for (int j = 1; j <= gridPoints; ++j)
          grid.push_back({lo[0] + (hi[0] - lo[0]) * double(i) / (gridPoints + 1),
                          lo[1] + (hi[1] - lo[1]) * double(j) / (gridPoints + 1)});
    }

    double logV = std::log(toDouble(s.totalWeight()));
    for (const auto& x : grid) {
      RatVec xr(m);
      for (int i = 0; i < m; ++i) xr[i] = doubleToRational(x[i]);
      if (s.classify(xr).location != PointLocation::Interior) continue;
      DualPoint dp = invertMomentMap(s, x, spec.tol);
      std::vector<Cell> row;
      for (int i = 0; i < m; ++i) row.push_back({fmt(x[i])});
      row.push_back({fmt(dp.rate)});
      row.push_back({fmt(dp.delta)});
      row.push_back({fmt(dp.hessianDet)});
      if (empirical) {
        // nearest admissible lattice point to N*x
        std::string v;
        IntVec g(m);
        for (int i = 0; i < m; ++i) g[i] = std::llround(nEmp * x[i]);
        for (int shift = 0; shift <= 3 && v.empty(); ++shift) {
          for (int sgn : {1, -1}) {
            IntVec gs = g;
            gs[0] += sgn * shift;
            if (table->contains(gs) && s.supportTest(nEmp, gs) &&
                table->numerator(gs) != 0) {
              v = fmt(logV - table->logValue(gs) / nEmp);
              break;
            }
            if (shift == 0) break;
          }
        }
        row.push_back({v});
      }
      t.rows.push_back(std::move(row));
    }

    writeOutput(t, spec.outPath, spec.format);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::remove((spec.outPath + ".tmp").c_str());
    return 1;
  }
}

}  // namespace latpath
