#pragma once

#include <vector>

namespace credal::lp {

enum class Status { Optimal, Infeasible, Unbounded, IterationLimit };

struct Result {
  Status status = Status::Infeasible;
  double objective = 0.0;       // c.x at the optimum (phase 2)
  double infeasibility = 0.0;   // phase-1 optimum: 0 iff the system is feasible
  std::vector<double> x;
};

// Minimize c.x subject to A x = b, x >= 0, via a dense two-phase simplex
// with Bland's rule. Sized for the tiny systems used here (tens of
// variables, at most a handful of rows).
Result solve_min_eq(const std::vector<std::vector<double>>& a,
                    std::vector<double> b, const std::vector<double>& c);

// Feasibility of A x = b, x >= 0. Reports the phase-1 optimum, i.e. the
// least total constraint violation.
double infeasibility_eq(const std::vector<std::vector<double>>& a,
                        const std::vector<double>& b);

}  // namespace credal::lp
