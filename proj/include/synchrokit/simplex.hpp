#pragma once

#include "synchrokit/linalg.hpp"
#include "synchrokit/rational.hpp"

namespace synchrokit {

// Exact rational linear programming:
//   maximize c.x  subject to  A x = b, x >= 0.
// Two-phase simplex with Bland's rule, so it terminates on every input
// (no cycling) and the answer is exact. Intended for tiny systems; there
// are no sparsity or pivoting heuristics.

struct SimplexResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rat objective;
  RatVec x;  // primal solution when optimal
};

SimplexResult simplex_max(const RatMatrix& A, const RatVec& b, const RatVec& c);

}  // namespace synchrokit
