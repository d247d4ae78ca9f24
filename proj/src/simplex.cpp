#include "fdepth/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace fdepth {
namespace {

// Tableau layout: rows 0..m-1 hold the constraints, row m holds the reduced
// costs, column n holds the right hand side. basis[i] is the variable that is
// basic in row i.
struct Tableau {
  std::size_t m, n;
  std::vector<std::vector<double>> t;  // (m+1) x (n+1)
  std::vector<std::size_t> basis;

  void pivot(std::size_t pr, std::size_t pc) {
    double piv = t[pr][pc];
    for (double& v : t[pr]) v /= piv;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == pr) continue;
      double f = t[r][pc];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c <= n; ++c) t[r][c] -= f * t[pr][c];
    }
    basis[pr] = pc;
  }

  // Returns false if the problem is unbounded. `allowed` marks columns that
  // may enter the basis.
  bool run(const std::vector<bool>& allowed) {
    const double eps = 1e-11;
    for (;;) {
      // Bland: smallest-index entering column with negative reduced cost.
      std::size_t pc = n;
      for (std::size_t c = 0; c < n; ++c) {
        if (allowed[c] && t[m][c] < -eps) { pc = c; break; }
      }
      if (pc == n) return true;  // optimal
      // Bland: smallest-index leaving row among min-ratio ties. The ratio
      // comparison is exact: a tolerance here can overshoot the true minimum
      // and drive a basic variable negative, which tiny pivots then amplify.
      std::size_t pr = m;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < m; ++r) {
        if (t[r][pc] > eps) {
          double ratio = t[r][n] / t[r][pc];
          if (pr == m || ratio < best || (ratio == best && basis[r] < basis[pr])) {
            best = ratio;
            pr = r;
          }
        }
      }
      if (pr == m) return false;  // unbounded
      pivot(pr, pc);
    }
  }
};

}  // namespace

LpResult solve_lp_min(std::vector<std::vector<double>> a, std::vector<double> b,
                      const std::vector<double>& c, double tol) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  LpResult res;
  if (m == 0) {
    res.feasible = true;
    res.x.assign(n, 0.0);
    return res;
  }

  for (std::size_t r = 0; r < m; ++r) {
    if (b[r] < 0.0) {
      b[r] = -b[r];
      for (double& v : a[r]) v = -v;
    }
  }

  // Phase 1: artificial variable per row.
  Tableau tab;
  tab.m = m;
  tab.n = n + m;
  tab.t.assign(m + 1, std::vector<double>(tab.n + 1, 0.0));
  tab.basis.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t cidx = 0; cidx < n; ++cidx) tab.t[r][cidx] = a[r][cidx];
    tab.t[r][n + r] = 1.0;
    tab.t[r][tab.n] = b[r];
    tab.basis[r] = n + r;
  }
  // Phase-1 costs: sum of artificials, expressed in reduced form.
  for (std::size_t cidx = 0; cidx < n; ++cidx) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += a[r][cidx];
    tab.t[m][cidx] = -s;
  }
  double rhs = 0.0;
  for (std::size_t r = 0; r < m; ++r) rhs += b[r];
  tab.t[m][tab.n] = -rhs;

  std::vector<bool> allowed(tab.n, true);
  tab.run(allowed);  // phase 1 is always bounded below by 0

  if (-tab.t[m][tab.n] > tol) return res;  // infeasible

  // Drive leftover artificials out of the basis where possible.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] >= n) {
      std::size_t pc = n;
      for (std::size_t cidx = 0; cidx < n; ++cidx) {
        if (std::fabs(tab.t[r][cidx]) > 1e-9) { pc = cidx; break; }
      }
      if (pc < n) tab.pivot(r, pc);
      // else: redundant row; its artificial stays basic at value ~0.
    }
  }

  // Phase 2: original costs; artificial columns barred from entering.
  for (std::size_t cidx = 0; cidx < tab.n; ++cidx)
    tab.t[m][cidx] = cidx < n ? c[cidx] : 0.0;
  tab.t[m][tab.n] = 0.0;
  for (std::size_t r = 0; r < m; ++r) {
    double f = tab.basis[r] < n ? c[tab.basis[r]] : 0.0;
    if (f == 0.0) continue;
    for (std::size_t cidx = 0; cidx <= tab.n; ++cidx)
      tab.t[m][cidx] -= f * tab.t[r][cidx];
  }
  for (std::size_t cidx = n; cidx < tab.n; ++cidx) allowed[cidx] = false;
  if (!tab.run(allowed)) return res;  // unbounded: report as infeasible

  res.feasible = true;
  res.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r)
    if (tab.basis[r] < n) res.x[tab.basis[r]] = tab.t[r][tab.n];
  res.objective = 0.0;
  for (std::size_t cidx = 0; cidx < n; ++cidx) res.objective += c[cidx] * res.x[cidx];
  return res;
}

}  // namespace fdepth
