#include "synchrokit/class_detect.hpp"

#include <algorithm>

#include "synchrokit/linalg.hpp"
#include "synchrokit/simplex.hpp"

namespace synchrokit {

bool is_eulerian(const Automaton& A) {
  if (!is_strongly_connected(A)) return false;
  std::vector<std::uint32_t> indeg(A.n, 0);
  for (State q = 0; q < A.n; ++q)
    for (Letter a = 0; a < A.letters(); ++a) ++indeg[A.delta[q][a]];
  return std::all_of(indeg.begin(), indeg.end(),
                     [&](std::uint32_t d) { return d == A.letters(); });
}

WordDistribution LetterDistribution::to_word_distribution() const {
  WordDistribution::Map m;
  for (Letter a = 0; a < p.size(); ++a) m.emplace(Word{a}, p[a]);
  return WordDistribution::from_weights(std::move(m));
}

std::optional<LetterDistribution> pseudo_eulerian_witness(const Automaton& A) {
  if (!is_strongly_connected(A)) return std::nullopt;
  const std::uint32_t k = A.letters();
  // Variables: p_0..p_{k-1}, t, s_0..s_{k-1} (slack in p_a - t - s_a = 0).
  // Rows: sum p_a = 1; per state q: sum_a |q a^-1| p_a = 1; per letter:
  // p_a - t - s_a = 0. Simplex's x >= 0 supplies p, t, s nonnegativity.
  const std::uint32_t nvars = 2 * k + 1, tvar = k;
  RatMatrix M(1 + A.n + k, nvars);
  RatVec b(1 + A.n + k), c(nvars);
  for (Letter a = 0; a < k; ++a) M.at(0, a) = 1;
  b[0] = 1;
  for (State q = 0; q < A.n; ++q) {
    b[1 + q] = 1;
    for (Letter a = 0; a < k; ++a) M.at(1 + A.delta[q][a], a) += 1;
  }
  for (Letter a = 0; a < k; ++a) {
    M.at(1 + A.n + a, a) = 1;
    M.at(1 + A.n + a, tvar) = -1;
    M.at(1 + A.n + a, k + 1 + a) = -1;
  }
  c[tvar] = 1;
  SimplexResult res = simplex_max(M, b, c);
  if (res.status != SimplexResult::Status::optimal || res.objective <= 0) return std::nullopt;
  LetterDistribution out;
  out.p.assign(res.x.begin(), res.x.begin() + k);
  return out;
}

namespace {

StateSet letter_image(const Automaton& A, const StateSet& S, Letter a) {
  StateSet out(A.n);
  for (State q : S.elements()) out.insert(A.delta[q][a]);
  return out;
}

}  // namespace

std::vector<std::pair<Letter, StateSet>> one_cluster_detect(const Automaton& A) {
  std::vector<std::pair<Letter, StateSet>> out;
  for (Letter a = 0; a < A.letters(); ++a) {
    // The decreasing chain Q >= aQ >= a^2 Q ... stabilizes at the union of
    // the cycles of a's functional graph.
    StateSet C = StateSet::full(A.n);
    for (;;) {
      StateSet next = letter_image(A, C, a);
      if (next == C) break;
      C = next;
    }
    std::uint32_t cycles = 0;
    StateSet seen(A.n);
    for (State q : C.elements()) {
      if (seen.contains(q)) continue;
      ++cycles;
      for (State p = q; !seen.contains(p); p = A.delta[p][a]) seen.insert(p);
    }
    if (cycles == 1) out.emplace_back(a, C);
  }
  return out;
}

std::optional<UniformWSet> verify_uniform_W(const Automaton& A, const std::vector<Word>& W,
                                            std::uint32_t k) {
  if (W.empty()) throw InputError("verify_uniform_W: W must be non-empty");
  UniformWSet out;
  out.W = W;
  std::sort(out.W.begin(), out.W.end(), ShortlexLess{});
  if (std::adjacent_find(out.W.begin(), out.W.end()) != out.W.end())
    return std::nullopt;  // W is a set of words; a repeat can never be uniform
  for (const Word& w : out.W) check_word(A, w);

  std::vector<std::vector<std::uint32_t>> count(A.n, std::vector<std::uint32_t>(A.n, 0));
  StateSet R(A.n);
  for (const Word& w : out.W)
    for (State q = 0; q < A.n; ++q) {
      State s = apply(A, q, w);
      ++count[q][s];
      R.insert(s);
    }
  const std::uint32_t r = R.size();
  if (k == 0) {
    if (out.W.size() % r != 0) return std::nullopt;
    k = static_cast<std::uint32_t>(out.W.size() / r);
  }
  for (State q = 0; q < A.n; ++q)
    for (State s : R.elements())
      if (count[q][s] != k) return std::nullopt;
  if (out.W.size() != std::size_t{k} * r) return std::nullopt;

  out.k = k;
  out.R = R;
  out.ell = out.W.front().size();
  out.L = out.W.back().size();
  return out;
}

UniformWSet one_cluster_W(const Automaton& A, Letter a, const StateSet& R) {
  if (a >= A.letters()) throw InputError("letter index out of range");
  const std::uint32_t r = R.size();
  if (r == 0 || r > A.n) throw InputError("cycle set size out of range");
  std::vector<Word> W;
  W.reserve(r);
  for (std::uint32_t e = A.n - r; e < A.n; ++e) W.push_back(Word(e, a));
  auto v = verify_uniform_W(A, W, 1);
  if (!v || !(v->R == R))
    throw InternalError("one-cluster power set failed uniformity validation");
  return *v;
}

}  // namespace synchrokit
