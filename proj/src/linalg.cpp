#include "synchrokit/linalg.hpp"

#include <algorithm>

namespace synchrokit {

RatMatrix RatMatrix::identity(std::uint32_t n) {
  RatMatrix m(n, n);
  for (std::uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix matmul(const RatMatrix& x, const RatMatrix& y) {
  if (x.cols != y.rows) throw InputError("matmul dimension mismatch");
  RatMatrix out(x.rows, y.cols);
  for (std::uint32_t i = 0; i < x.rows; ++i)
    for (std::uint32_t k = 0; k < x.cols; ++k) {
      const Rat& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::uint32_t j = 0; j < y.cols; ++j) out.at(i, j) += xik * y.at(k, j);
    }
  return out;
}

RatVec row_times(const RatVec& row, const RatMatrix& m) {
  if (row.size() != m.rows) throw InputError("row_times dimension mismatch");
  RatVec out(m.cols);
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    if (row[i] == 0) continue;
    for (std::uint32_t j = 0; j < m.cols; ++j) out[j] += row[i] * m.at(i, j);
  }
  return out;
}

RatVec times_col(const RatMatrix& m, const RatVec& col) {
  if (col.size() != m.cols) throw InputError("times_col dimension mismatch");
  RatVec out(m.rows);
  for (std::uint32_t i = 0; i < m.rows; ++i)
    for (std::uint32_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * col[j];
  return out;
}

Rat dot(const RatVec& x, const RatVec& y) {
  if (x.size() != y.size()) throw InputError("dot dimension mismatch");
  Rat out = 0;
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * y[i];
  return out;
}

bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool is_doubly_stochastic(const RatMatrix& m) {
  if (m.rows != m.cols) return false;
  for (const Rat& x : m.a)
    if (x < 0) return false;
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    Rat row = 0, col = 0;
    for (std::uint32_t j = 0; j < m.cols; ++j) {
      row += m.at(i, j);
      col += m.at(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

RatMatrix word_matrix(const Automaton& A, const Word& w) {
  check_word(A, w);
  RatMatrix m(A.n, A.n);
  for (State q = 0; q < A.n; ++q) m.at(q, apply(A, q, w)) = 1;
  return m;
}

RatVec char_vector(const StateSet& S, std::uint32_t n) {
  RatVec v(n);
  for (State q : S.elements()) {
    if (q >= n) throw InputError("char_vector: state out of range");
    v[q] = 1;
  }
  return v;
}

RatVec apply_letter_col(const Automaton& A, Letter a, const RatVec& v) {
  if (a >= A.letters()) throw InputError("letter index out of range");
  if (v.size() != A.n) throw InputError("apply_letter_col dimension mismatch");
  RatVec out(A.n);
  for (State q = 0; q < A.n; ++q) out[q] = v[A.delta[q][a]];
  return out;
}

void Subspace::reduce(RatVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& coef = v[pivots_[i]];
    if (coef == 0) continue;
    Rat c = coef;  // copy: v[pivot] mutates below
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= c * rows_[i][j];
  }
}

bool Subspace::insert(RatVec v) {
  if (!rows_.empty() && v.size() != rows_.front().size())
    throw InputError("subspace dimension mismatch");
  reduce(v);
  std::size_t pivot = v.size();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == v.size()) return false;  // dependent
  Rat inv = v[pivot];
  for (auto& x : v) x /= inv;
  // eliminate the new pivot from existing rows, then insert keeping pivots sorted
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = rows_[i][pivot];
    if (c == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) rows_[i][j] -= c * v[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, static_cast<std::uint32_t>(pivot));
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(v));
  return true;
}

bool Subspace::contains(RatVec v) const {
  if (rows_.empty()) return is_zero(v);
  if (v.size() != rows_.front().size()) throw InputError("subspace dimension mismatch");
  reduce(v);
  return is_zero(v);
}

Subspace subspace_span(const std::vector<RatVec>& vectors) {
  Subspace s;
  for (const auto& v : vectors) s.insert(v);
  return s;
}

std::optional<ChainWitness> ascending_chain_witness(const Automaton& A,
                                                    const std::vector<RatVec>& seeds,
                                                    const RatVec& functional,
                                                    std::uint32_t depth_cap,
                                                    std::vector<std::uint32_t>* dims_out) {
  if (functional.size() != A.n) throw InputError("functional dimension mismatch");
  struct Node {
    RatVec vec;
    Word word;
    std::size_t seed;
  };
  Subspace space;
  std::vector<Node> frontier;
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (seeds[i].size() != A.n) throw InputError("seed dimension mismatch");
    if (dot(functional, seeds[i]) != 0) return ChainWitness{Word{}, i};
  }
  for (std::size_t i = 0; i < seeds.size(); ++i)
    if (space.insert(seeds[i])) frontier.push_back({seeds[i], Word{}, i});
  if (dims_out) {
    dims_out->clear();
    dims_out->push_back(space.dim());
  }
  for (std::uint32_t depth = 1; depth <= depth_cap && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    // pi(a u) s = pi(a) (pi(u) s): prepend the letter. Letters in increasing
    // order over a lex-ordered frontier keeps the level in lex word order.
    for (Letter a = 0; a < A.letters(); ++a) {
      for (const Node& node : frontier) {
        RatVec v = apply_letter_col(A, a, node.vec);
        Word u;
        u.reserve(node.word.size() + 1);
        u.push_back(a);
        u.insert(u.end(), node.word.begin(), node.word.end());
        if (dot(functional, v) != 0) return ChainWitness{std::move(u), node.seed};
        if (space.insert(v)) next.push_back({std::move(v), std::move(u), node.seed});
      }
    }
    frontier = std::move(next);
    if (dims_out && !frontier.empty()) dims_out->push_back(space.dim());
  }
  return std::nullopt;  // chain stabilized inside the hyperplane (or cap reached with all of it inside)
}

}  // namespace synchrokit
