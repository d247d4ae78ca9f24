#pragma once

#include <vector>

namespace fdepth {

struct LpResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> x;
};

// Dense two-phase primal simplex with Bland's rule.
// Solves  min c^T x  s.t.  A x = b,  x >= 0.
// Feasibility is decided to within `tol` on the phase-1 objective.
LpResult solve_lp_min(std::vector<std::vector<double>> a, std::vector<double> b,
                      const std::vector<double>& c, double tol = 1e-9);

}  // namespace fdepth
