#include "synchrokit/simplex.hpp"

#include <cstddef>
#include <vector>

namespace synchrokit {

namespace {

enum class StepOutcome { pivoted, optimal, unbounded };

// Dense tableau: rows of length width+1 (variable columns then rhs), an
// objective row of reduced costs, and the current basis (one variable per row).
struct Tableau {
  std::vector<RatVec> row;
  RatVec obj;       // reduced costs; entering candidates have obj[j] > 0
  Rat value = 0;    // current objective value
  std::vector<std::size_t> basis;
  std::size_t width = 0;  // number of variable columns

  Rat& rhs(std::size_t i) { return row[i][width]; }

  void pivot(std::size_t r, std::size_t j) {
    Rat inv = row[r][j];
    for (auto& x : row[r]) x /= inv;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i == r) continue;
      Rat c = row[i][j];
      if (c == 0) continue;
      for (std::size_t k = 0; k <= width; ++k) row[i][k] -= c * row[r][k];
    }
    Rat c = obj[j];
    if (c != 0) {
      for (std::size_t k = 0; k < width; ++k) obj[k] -= c * row[r][k];
      value += c * row[r][width];
    }
    basis[r] = j;
  }

  // Bland's rule: entering = lowest-index improving column; leaving = lowest
  // basic variable among the minimum-ratio rows. Guarantees termination.
  StepOutcome step() {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (obj[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) return StepOutcome::optimal;
    std::size_t leave = row.size();
    Rat best;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i][enter] <= 0) continue;
      Rat ratio = rhs(i) / row[i][enter];
      if (leave == row.size() || ratio < best ||
          (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == row.size()) return StepOutcome::unbounded;
    pivot(leave, enter);
    return StepOutcome::pivoted;
  }

  StepOutcome run() {
    StepOutcome out;
    while ((out = step()) == StepOutcome::pivoted) {
    }
    return out;
  }
};

}  // namespace

SimplexResult simplex_max(const RatMatrix& A, const RatVec& b, const RatVec& c) {
  const std::size_t m = A.rows, n = A.cols;
  if (b.size() != m || c.size() != n) throw InputError("simplex dimension mismatch");

  // Phase 1: basis of artificial variables, maximize minus their sum.
  Tableau t;
  t.width = n + m;
  t.row.assign(m, RatVec(t.width + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t.row[i][j] = flip ? -A.at(i, j) : Rat(A.at(i, j));
    t.row[i][n + i] = 1;
    t.row[i][t.width] = flip ? -b[i] : b[i];
    t.basis[i] = n + i;
  }
  // Reduced costs for max(-sum of artificials) under the artificial basis:
  // structural column j gets sum_i row[i][j]; artificial columns get 0.
  t.obj.assign(t.width, Rat(0));
  t.value = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.obj[j] += t.row[i][j];
    t.value -= t.rhs(i);
  }
  if (t.run() == StepOutcome::unbounded)
    throw InternalError("phase-1 simplex reported unbounded");  // objective is bounded by 0
  if (t.value != 0) return {SimplexResult::Status::infeasible, Rat(0), {}};

  // Drive leftover artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.row.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t j = 0;
    while (j < n && t.row[i][j] == 0) ++j;
    if (j < n) {
      t.pivot(i, j);
      ++i;
    } else {
      t.row.erase(t.row.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }

  // Phase 2: drop artificial columns, rebuild reduced costs from c.
  for (auto& r : t.row) {
    r[n] = r[t.width];  // move rhs next to the structural columns
    r.resize(n + 1);
  }
  t.width = n;
  t.obj = c;
  t.value = 0;
  for (std::size_t i = 0; i < t.row.size(); ++i) {
    const Rat& cb = c[t.basis[i]];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < n; ++j) t.obj[j] -= cb * t.row[i][j];
    t.value += cb * t.rhs(i);
  }
  if (t.run() == StepOutcome::unbounded) return {SimplexResult::Status::unbounded, Rat(0), {}};

  RatVec x(n);
  for (std::size_t i = 0; i < t.row.size(); ++i) x[t.basis[i]] = t.rhs(i);
  return {SimplexResult::Status::optimal, t.value, std::move(x)};
}

}  // namespace synchrokit
