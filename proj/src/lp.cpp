#include "credal/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace credal::lp {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr std::size_t kMaxIters = 20000;

struct Tableau {
  // rows 0..m-1: constraints; row m: reduced costs with rhs = -objective.
  std::vector<std::vector<double>> t;
  std::vector<int> basis;  // basic column per constraint row
  std::size_t m = 0, cols = 0;

  void pivot(std::size_t row, std::size_t col) {
    const double piv = t[row][col];
    for (double& v : t[row]) v /= piv;
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (r == row) continue;
      const double factor = t[r][col];
      if (std::abs(factor) < 1e-300) continue;
      for (std::size_t j = 0; j < cols; ++j) t[r][j] -= factor * t[row][j];
      t[r][col] = 0.0;  // kill roundoff in the pivot column
    }
    basis[row] = static_cast<int>(col);
  }

  // Bland's rule: first negative reduced cost enters, smallest basis index
  // leaves on ratio ties. Scans columns [0, ncols_scan).
  Status iterate(std::size_t ncols_scan) {
    for (std::size_t iter = 0; iter < kMaxIters; ++iter) {
      std::size_t col = ncols_scan;
      for (std::size_t j = 0; j < ncols_scan; ++j) {
        if (t[m][j] < -kPivotEps) {
          col = j;
          break;
        }
      }
      if (col == ncols_scan) return Status::Optimal;

      std::size_t row = m;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < m; ++r) {
        if (t[r][col] <= kPivotEps) continue;
        const double ratio = t[r][cols - 1] / t[r][col];
        if (ratio < best - 1e-12 ||
            (ratio < best + 1e-12 && (row == m || basis[r] < basis[row]))) {
          best = ratio;
          row = r;
        }
      }
      if (row == m) return Status::Unbounded;
      pivot(row, col);
    }
    return Status::IterationLimit;
  }
};

}  // namespace

Result solve_min_eq(const std::vector<std::vector<double>>& a,
                    std::vector<double> b, const std::vector<double>& c) {
  const std::size_t m = a.size();
  const std::size_t n = c.size();
  Result res;

  Tableau tab;
  tab.m = m;
  tab.cols = n + m + 1;  // original vars, one artificial per row, rhs
  tab.t.assign(m + 1, std::vector<double>(tab.cols, 0.0));
  tab.basis.assign(m, 0);

  for (std::size_t r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = sign * a[r][j];
    tab.t[r][n + r] = 1.0;
    tab.t[r][tab.cols - 1] = sign * b[r];
    tab.basis[r] = static_cast<int>(n + r);
  }

  // Phase 1: minimize the sum of artificials. With an all-artificial basis the
  // reduced cost row is minus the column sums over the constraint rows.
  for (std::size_t j = 0; j < tab.cols; ++j) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += tab.t[r][j];
    tab.t[m][j] = (j >= n && j < n + m) ? 0.0 : -s;
  }

  Status st = tab.iterate(n + m);
  if (st != Status::Optimal) {
    res.status = st;
    return res;
  }
  res.infeasibility = -tab.t[m][tab.cols - 1];
  if (res.infeasibility > 1e-7) {
    res.status = Status::Infeasible;
    return res;
  }

  // Drive leftover artificials out of the basis where possible; rows that
  // cannot be pivoted are redundant and stay with a zero-valued artificial.
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < static_cast<int>(n)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(tab.t[r][j]) > 1e-9) {
        tab.pivot(r, j);
        break;
      }
    }
  }

  // Phase 2: rebuild the reduced cost row from c (artificials barred by
  // scanning only the original columns).
  for (std::size_t j = 0; j < tab.cols; ++j) {
    double z = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const int bcol = tab.basis[r];
      const double cb = (bcol < static_cast<int>(n)) ? c[bcol] : 0.0;
      z += cb * tab.t[r][j];
    }
    const double cj = (j < n) ? c[j] : 0.0;
    tab.t[m][j] = cj - z;
  }
  {
    double z = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
      const int bcol = tab.basis[r];
      const double cb = (bcol < static_cast<int>(n)) ? c[bcol] : 0.0;
      z += cb * tab.t[r][tab.cols - 1];
    }
    tab.t[m][tab.cols - 1] = -z;
  }

  st = tab.iterate(n);
  if (st != Status::Optimal) {
    res.status = st;
    return res;
  }

  res.status = Status::Optimal;
  res.x.assign(n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    if (tab.basis[r] < static_cast<int>(n)) {
      res.x[tab.basis[r]] = tab.t[r][tab.cols - 1];
    }
  }
  res.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) res.objective += c[j] * res.x[j];
  return res;
}

double infeasibility_eq(const std::vector<std::vector<double>>& a,
                        const std::vector<double>& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();

  Tableau tab;
  tab.m = m;
  tab.cols = n + m + 1;
  tab.t.assign(m + 1, std::vector<double>(tab.cols, 0.0));
  tab.basis.assign(m, 0);

  for (std::size_t r = 0; r < m; ++r) {
    const double sign = b[r] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) tab.t[r][j] = sign * a[r][j];
    tab.t[r][n + r] = 1.0;
    tab.t[r][tab.cols - 1] = sign * b[r];
    tab.basis[r] = static_cast<int>(n + r);
  }
  for (std::size_t j = 0; j < tab.cols; ++j) {
    double s = 0.0;
    for (std::size_t r = 0; r < m; ++r) s += tab.t[r][j];
    tab.t[m][j] = (j >= n && j < n + m) ? 0.0 : -s;
  }

  const Status st = tab.iterate(n + m);
  if (st != Status::Optimal) return std::numeric_limits<double>::infinity();
  return -tab.t[m][tab.cols - 1];
}

}  // namespace credal::lp
