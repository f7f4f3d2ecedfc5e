#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "synchrokit/automaton.hpp"
#include "synchrokit/rational.hpp"

namespace synchrokit {

using RatVec = std::vector<Rat>;

// Dense exact-rational matrix, row-major. Row/column orientation of the
// vectors it multiplies is a usage convention (characteristic vectors of
// state sets are rows; their transposes are columns).
struct RatMatrix {
  std::uint32_t rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t{r} * c) {}
  static RatMatrix identity(std::uint32_t n);

  Rat& at(std::uint32_t i, std::uint32_t j) { return a[std::size_t{i} * cols + j]; }
  const Rat& at(std::uint32_t i, std::uint32_t j) const { return a[std::size_t{i} * cols + j]; }
  bool operator==(const RatMatrix&) const = default;
};

RatMatrix matmul(const RatMatrix& x, const RatMatrix& y);
RatVec row_times(const RatVec& row, const RatMatrix& m);   // row vector * matrix
RatVec times_col(const RatMatrix& m, const RatVec& col);   // matrix * column vector
Rat dot(const RatVec& x, const RatVec& y);
bool is_zero(const RatVec& v);

// Square, entries >= 0, every row and every column sums to exactly 1.
bool is_doubly_stochastic(const RatMatrix& m);

// pi(w): the 0/1 matrix with entry (q, r) = 1 iff q.w = r. Multiplicative:
// pi(uv) = pi(u) pi(v).
RatMatrix word_matrix(const Automaton& A, const Word& w);

// Characteristic row vector of S in an n-dimensional space.
RatVec char_vector(const StateSet& S, std::uint32_t n);

// pi(a) * v for a column vector v, without materializing the matrix:
// (pi(a) v)[q] = v[q.a].
RatVec apply_letter_col(const Automaton& A, Letter a, const RatVec& v);

// Row space in reduced row-echelon form: pivots strictly increasing, each
// pivot 1 and alone in its column.
class Subspace {
 public:
  // Returns true iff v was independent of the current basis (dimension grew).
  bool insert(RatVec v);
  bool contains(RatVec v) const;
  std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<RatVec>& basis() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

 private:
  void reduce(RatVec& v) const;
  std::vector<RatVec> rows_;
  std::vector<std::uint32_t> pivots_;
};

Subspace subspace_span(const std::vector<RatVec>& vectors);

struct ChainWitness {
  Word word;
  std::size_t seed;  // index into the seed list
};

// Searches for a word u and seed s with functional(pi(u) s) != 0, where the
// target hyperplane V is the kernel of `functional`. Breadth-first growth of
// the chain W_m = Sigma^{<=m} span(seeds): a level that adds no dimension
// means the chain has stabilized, so Sigma* span(seeds) stays inside V and
// the search reports absent.
//
// The returned witness is the shortest one; within a level, candidates are
// tried in lexicographic word order over the retained (independent) frontier,
// seeds in input order at depth zero. If a witness exists at all, it appears
// at depth <= dim(V) - dim(span(seeds)) + 1, so any depth_cap at least that
// large makes "absent" definitive.
//
// If dims_out is non-null it receives dim(W_0), dim(W_1), ... up to the last
// level explored (strictly increasing until stabilization).
std::optional<ChainWitness> ascending_chain_witness(const Automaton& A,
                                                    const std::vector<RatVec>& seeds,
                                                    const RatVec& functional,
                                                    std::uint32_t depth_cap,
                                                    std::vector<std::uint32_t>* dims_out = nullptr);

}  // namespace synchrokit
