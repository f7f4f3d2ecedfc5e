#include "synchrokit/word_distribution.hpp"

#include <algorithm>
#include <utility>

namespace synchrokit {

WordDistribution WordDistribution::point_mass(Word w) {
  WordDistribution d;
  d.w_.emplace(std::move(w), Rat(1));
  return d;
}

WordDistribution WordDistribution::uniform_on(const std::vector<Word>& W) {
  if (W.empty()) throw InputError("uniform_on: empty word set");
  WordDistribution d;
  Rat each = rat(1, static_cast<long>(W.size()));
  for (const Word& w : W)
    if (!d.w_.emplace(w, each).second) throw InputError("uniform_on: duplicate word");
  return d;
}

WordDistribution WordDistribution::from_weights(Map weights) {
  WordDistribution d;
  d.w_ = std::move(weights);
  Rat total = 0;
  for (const auto& [w, p] : d.w_) {
    if (p <= 0) throw InputError("from_weights: weights must be positive");
    total += p;
  }
  if (total != 1) throw InputError("from_weights: weights must sum to 1");
  return d;
}

Rat WordDistribution::weight(const Word& w) const {
  auto it = w_.find(w);
  return it == w_.end() ? Rat(0) : it->second;
}

std::vector<Word> WordDistribution::support() const {
  std::vector<Word> out;
  out.reserve(w_.size());
  for (const auto& [w, p] : w_) out.push_back(w);
  return out;
}

std::size_t WordDistribution::max_word_length() const {
  return w_.empty() ? 0 : w_.rbegin()->first.size();  // shortlex: longest last
}

std::size_t WordDistribution::min_word_length() const {
  return w_.empty() ? 0 : w_.begin()->first.size();
}

Rat WordDistribution::total_weight() const {
  Rat t = 0;
  for (const auto& [w, p] : w_) t += p;
  return t;
}

void WordDistribution::validate() const {
  for (const auto& [w, p] : w_)
    if (p <= 0) throw InternalError("distribution stores a non-positive weight");
  if (total_weight() != 1) throw InternalError("distribution weights do not sum to 1");
}

WordDistribution product(const WordDistribution& P, const WordDistribution& Q,
                         std::size_t support_cap) {
  WordDistribution out;
  for (const auto& [u, pu] : P.w_) {
    for (const auto& [v, qv] : Q.w_) {
      Word uv;
      uv.reserve(u.size() + v.size());
      uv.insert(uv.end(), u.begin(), u.end());
      uv.insert(uv.end(), v.begin(), v.end());
      out.w_[std::move(uv)] += pu * qv;
      if (out.w_.size() > support_cap)
        throw InapplicableError("product support exceeds cap of " + std::to_string(support_cap));
    }
  }
  // weights are products of positives summed; nothing to prune
  return out;
}

WordDistribution cesaro_average(const WordDistribution& P, std::uint32_t n,
                                std::size_t support_cap) {
  if (n < 1) throw InputError("cesaro_average: n must be >= 1");
  WordDistribution acc;   // running sum of P^0 .. P^m, scaled at the end
  WordDistribution power = WordDistribution::point_mass(Word{});
  acc.w_ = power.w_;
  for (std::uint32_t m = 1; m < n; ++m) {
    power = product(power, P, support_cap);
    for (const auto& [w, p] : power.w_) {
      acc.w_[w] += p;
      if (acc.w_.size() > support_cap)
        throw InapplicableError("Cesaro support exceeds cap of " + std::to_string(support_cap));
    }
  }
  Rat inv_n = rat(1, n);
  for (auto& [w, p] : acc.w_) p *= inv_n;
  return acc;
}

RatMatrix distribution_matrix(const Automaton& A, const WordDistribution& P) {
  RatMatrix m(A.n, A.n);
  for (const auto& [w, p] : P.weights()) {
    check_word(A, w);
    for (State q = 0; q < A.n; ++q) m.at(q, apply(A, q, w)) += p;
  }
  return m;
}

Rat expectation_zs(const Automaton& A, const WordDistribution& P, const StateSet& S,
                   const StateSet& R) {
  if (S.universe() != A.n || R.universe() != A.n)
    throw InputError("expectation_zs: set universe does not match automaton");
  Rat total = 0;
  for (const auto& [w, p] : P.weights()) {
    check_word(A, w);
    long hits = 0;
    for (State q : R.elements())
      if (S.contains(apply(A, q, w))) ++hits;
    if (hits) total += p * hits;
  }
  return total;
}

}  // namespace synchrokit
