#pragma once

#include <gmpxx.h>

#include <string>

namespace synchrokit {

// All arithmetic in this library is exact. Equalities like "[R] P2 P1 = [R]"
// are checked with zero tolerance, so floating point is never used.
using Rat = mpq_class;

// mpq_class(n, d) does not reduce the fraction; this helper does.
inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Exact rendering: integers as "p", everything else as "p/q".
inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace synchrokit
