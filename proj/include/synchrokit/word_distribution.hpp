#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "synchrokit/automaton.hpp"
#include "synchrokit/linalg.hpp"
#include "synchrokit/rational.hpp"

namespace synchrokit {

// Shortlex: shorter words first, ties broken by letter indices left to right.
struct ShortlexLess {
  bool operator()(const Word& x, const Word& y) const {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  }
};

// Products and Cesaro averages refuse to materialize supports larger than
// this unless the caller raises the cap (full-alphabet Cesaro averages grow
// like |Sigma|^(n-1)).
inline constexpr std::size_t kDefaultSupportCap = 1'000'000;

// Finitely supported probability on Sigma*, exact weights. Every instance
// satisfies: all stored weights > 0, weights sum to 1. Construct through the
// factories; arithmetic preserves the invariant.
class WordDistribution {
 public:
  using Map = std::map<Word, Rat, ShortlexLess>;

  static WordDistribution point_mass(Word w);
  // Uniform weights 1/|W|. W must be non-empty and duplicate-free.
  static WordDistribution uniform_on(const std::vector<Word>& W);
  // General checked constructor: weights must be positive and sum to exactly 1.
  static WordDistribution from_weights(Map weights);

  const Map& weights() const { return w_; }
  Rat weight(const Word& w) const;  // 0 when w is outside the support
  std::size_t support_size() const { return w_.size(); }
  std::vector<Word> support() const;  // shortlex order
  std::size_t max_word_length() const;
  std::size_t min_word_length() const;
  Rat total_weight() const;

  // Invariant audit (positive weights, total exactly 1); throws InternalError.
  void validate() const;

  bool operator==(const WordDistribution&) const = default;

 private:
  WordDistribution() = default;
  Map w_;

  friend WordDistribution product(const WordDistribution&, const WordDistribution&, std::size_t);
  friend WordDistribution cesaro_average(const WordDistribution&, std::uint32_t, std::size_t);
};

// Convolution: weight of w = sum over splits w = uv of P(u) Q(v). Support is
// the elementwise concatenation of the supports. Throws InapplicableError if
// the result's support would exceed support_cap.
WordDistribution product(const WordDistribution& P, const WordDistribution& Q,
                         std::size_t support_cap = kDefaultSupportCap);

// (1/n) (P^0 + P^1 + ... + P^(n-1)) with P^0 the point mass on the empty
// word. For P supported on the whole alphabet this has support exactly
// Sigma^(<= n-1). n must be >= 1.
WordDistribution cesaro_average(const WordDistribution& P, std::uint32_t n,
                                std::size_t support_cap = kDefaultSupportCap);

// pi extended linearly: sum of P(w) pi(w). Always row-stochastic.
RatMatrix distribution_matrix(const Automaton& A, const WordDistribution& P);

// E[Z_S] = [R] . distribution_matrix(P) . [S]^T = sum of P(w) |S w^-1 and R|.
Rat expectation_zs(const Automaton& A, const WordDistribution& P, const StateSet& S,
                   const StateSet& R);

}  // namespace synchrokit
