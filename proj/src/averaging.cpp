#include "synchrokit/averaging.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace synchrokit {

namespace {

// support(P2) == Sigma^(<= depth): all words within depth and, per length i,
// exactly |Sigma|^i of them (map keys are distinct, so counts decide equality).
bool support_equals_sigma_up_to(const WordDistribution& P2, std::uint32_t k, std::size_t depth) {
  std::vector<std::size_t> count(depth + 1, 0);
  for (const auto& [w, p] : P2.weights()) {
    if (w.size() > depth) return false;
    ++count[w.size()];
  }
  std::size_t want = 1;
  for (std::size_t i = 0; i <= depth; ++i) {
    if (count[i] != want) return false;
    if (i < depth) {
      if (want > std::numeric_limits<std::size_t>::max() / k) return false;  // k^i beyond any support
      want *= k;
    }
  }
  return true;
}

}  // namespace

HypothesesReport verify_hypotheses(const AveragingInstance& inst,
                                   const std::optional<WordDistribution>& P2,
                                   std::size_t support_cap) {
  const Automaton& A = inst.A;
  HypothesesReport rep;
  rep.p2_given = P2.has_value();

  if (P2) {
    rep.p2_support_ok =
        inst.c <= A.n && support_equals_sigma_up_to(*P2, A.letters(), A.n - inst.c);
  } else {
    rep.p2_support_ok = true;
  }

  RatVec row_R = char_vector(inst.R, A.n);
  RatMatrix M = P2 ? distribution_matrix(A, product(*P2, inst.P1, support_cap))
                   : distribution_matrix(A, inst.P1);
  rep.fixes_R = row_times(row_R, M) == row_R;

  rep.R_reachable = true;
  for (State q : inst.R.elements())
    if (!inst.R.subset_of(reachable_from(A, q))) {
      rep.R_reachable = false;
      break;
    }

  check_word(A, inst.w0);
  rep.w0_maps_into_R = apply(A, StateSet::full(A.n), inst.w0).subset_of(inst.R);
  return rep;
}

std::uint32_t compute_c_bruteforce(const Automaton& A, const std::vector<Word>& X,
                                   const StateSet& R, std::uint32_t cap) {
  if (R.universe() != A.n) throw InputError("set universe does not match automaton");
  const std::uint32_t r = R.size();
  if (r == 0) throw InputError("R must be non-empty");
  if (r > cap)
    throw InapplicableError("c brute-force requires |R| <= " + std::to_string(cap) +
                            ", got " + std::to_string(r));
  if (r == 1) return 2;  // no proper non-empty subsets: condition holds vacuously

  // pre[i][s] = bitset of { q : q X[i] = s }
  std::vector<std::vector<std::uint64_t>> pre(X.size(), std::vector<std::uint64_t>(A.n, 0));
  for (std::size_t i = 0; i < X.size(); ++i) {
    check_word(A, X[i]);
    for (State q = 0; q < A.n; ++q) pre[i][apply(A, q, X[i])] |= std::uint64_t{1} << q;
  }

  const std::vector<State> elem = R.elements();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << r); ++mask) {
    bool varies = false, have = false;
    std::uint64_t first = 0;
    for (std::size_t i = 0; i < X.size() && !varies; ++i) {
      std::uint64_t p = 0;
      for (std::uint64_t m = mask; m; m &= m - 1)
        p |= pre[i][elem[static_cast<std::size_t>(__builtin_ctzll(m))]];
      if (!have) {
        first = p;
        have = true;
      } else if (p != first) {
        varies = true;
      }
    }
    if (!varies) return 1;  // this S has one common preimage across all of X
  }
  return 2;
}

std::uint32_t zscore(const Automaton& A, const StateSet& S, const StateSet& R, const Word& w) {
  if (S.universe() != A.n || R.universe() != A.n)
    throw InputError("set universe does not match automaton");
  if (!S.subset_of(R)) throw InputError("zscore: S must be a subset of R");
  return (preimage(A, S, w) & R).size();
}

ExpansionStep expand_once(const Automaton& A, const StateSet& S, const StateSet& R,
                          const std::vector<Word>& X, std::uint32_t c) {
  if (c != 1 && c != 2) throw InputError("c must be 1 or 2");
  if (S.universe() != A.n || R.universe() != A.n)
    throw InputError("set universe does not match automaton");
  if (S.empty() || S == R || !S.subset_of(R))
    throw InputError("expansion needs a non-empty proper subset of R");
  if (X.empty()) throw InputError("X must be non-empty");

  const std::uint32_t n = A.n, r = R.size(), s = S.size();
  // The guaranteed prefix cap is n-c; the unavoidable exception is the
  // half-sized set under c = 2, where only n-1 is certain.
  const std::uint32_t cap_u = (c == 2 && 2 * s == r) ? n - 1 : n - c;
  std::size_t L = 0;
  for (const Word& x : X) {
    check_word(A, x);
    L = std::max(L, x.size());
  }
  const std::size_t cap_total = cap_u + L;

  // State per prefix u: the tuple of preimages (S X[i]^-1) u^-1. Prefixes with
  // equal tuples score identically on every suffix, so only the first
  // (shortlex) representative is kept; growing u by a prepended letter turns
  // each component through one letter preimage.
  std::vector<std::uint64_t> base(X.size());
  for (std::size_t i = 0; i < X.size(); ++i) base[i] = preimage(A, S, X[i]).bits();

  auto scan = [&](const std::vector<std::uint64_t>& tuple,
                  const Word& u) -> std::optional<ExpansionStep> {
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      StateSet T = StateSet::from_bits(n, tuple[i]) & R;
      if (T.size() > s) {
        Word w = u;
        w.insert(w.end(), X[i].begin(), X[i].end());
        return ExpansionStep{S, std::move(w), T, cap_total};
      }
    }
    return std::nullopt;
  };

  struct Node {
    std::vector<std::uint64_t> tuple;
    Word u;
  };
  if (auto hit = scan(base, {})) return *hit;
  std::set<std::vector<std::uint64_t>> seen{base};
  std::vector<Node> frontier{{base, {}}};

  for (std::uint32_t depth = 1; depth <= cap_u && !frontier.empty(); ++depth) {
    std::vector<Node> next;
    // prefix a.u first differs in a, so letters outer over a lex-ordered
    // frontier generates the new level in lex order
    for (Letter a = 0; a < A.letters(); ++a) {
      for (const Node& node : frontier) {
        std::vector<std::uint64_t> t(node.tuple.size());
        for (std::size_t i = 0; i < t.size(); ++i)
          t[i] = preimage_letter(A, StateSet::from_bits(n, node.tuple[i]), a).bits();
        if (!seen.insert(t).second) continue;
        Word u;
        u.reserve(node.u.size() + 1);
        u.push_back(a);
        u.insert(u.end(), node.u.begin(), node.u.end());
        if (auto hit = scan(t, u)) return *hit;
        next.push_back({std::move(t), std::move(u)});
      }
    }
    frontier = std::move(next);
  }
  throw InternalError("expansion search exhausted: the instance hypotheses cannot all hold");
}

std::string method_name(SyncMethod m) {
  switch (m) {
    case SyncMethod::pseudo_eulerian: return "pseudo-eulerian";
    case SyncMethod::w_set: return "w-set";
    case SyncMethod::one_cluster: return "one-cluster";
    case SyncMethod::custom: return "custom";
  }
  throw InternalError("unknown method tag");
}

long long theorem_bound(std::uint32_t n, std::uint32_t r, std::uint32_t c, std::size_t L,
                        std::size_t ell, bool R_equals_Q, bool r_odd_improvement) {
  if (n == 0) throw InputError("n must be positive");
  if (c != 1 && c != 2) throw InputError("c must be 1 or 2");
  if (r == 0 || r > n) throw InputError("r must be in [1, n]");
  if ((r == n) != R_equals_Q) throw InputError("R = Q exactly when r = n");
  const long long term = static_cast<long long>(n) - c + static_cast<long long>(L);
  const bool improved = r_odd_improvement && r % 2 == 1;
  if (R_equals_Q) return (improved ? 1 : static_cast<long long>(c)) + (static_cast<long long>(n) - 2) * term;
  return (static_cast<long long>(r) - 1) * term + static_cast<long long>(ell) +
         (improved ? 0 : static_cast<long long>(c) - 1);
}

SyncCertificate synchronize_core(const AveragingInstance& inst, SyncMethod method,
                                 bool r_odd_improvement) {
  const Automaton& A = inst.A;
  A.validate();
  if (inst.c != 1 && inst.c != 2) throw InputError("c must be 1 or 2");
  if (inst.R.universe() != A.n) throw InputError("set universe does not match automaton");
  if (inst.R.empty()) throw InputError("R must be non-empty");
  if (inst.P1.support_size() == 0) throw InputError("P1 must have non-empty support");
  check_word(A, inst.w0);
  if (!apply(A, StateSet::full(A.n), inst.w0).subset_of(inst.R))
    throw InputError("w0 does not take every state into R");
  if (!is_synchronizing(A)) throw NoSyncError("automaton has no synchronizing word");

  SyncCertificate cert;
  cert.method = method;
  cert.bound = theorem_bound(A.n, inst.R.size(), inst.c, inst.L(), inst.ell(),
                             inst.R_equals_Q(), r_odd_improvement);
  const std::vector<Word> X = inst.P1.support();

  if (A.n == 1) {
    // single state: the empty word is already synchronizing
  } else if (inst.R_equals_Q()) {
    auto col = find_collapsing_letter(A);
    if (!col)
      throw InternalError("synchronizing automaton with n > 1 has no collapsing letter");
    cert.initial = *col;
    StateSet S = preimage_letter(A, StateSet::singleton(A.n, col->first), col->second);
    while (!S.is_full()) {
      ExpansionStep step = expand_once(A, S, inst.R, X, inst.c);
      S = step.S_after;
      cert.steps.push_back(std::move(step));
    }
    // Q . (w_m ... w_1 a) walks down the chain: each S_{i+1} w_i lies in S_i
    for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it)
      cert.word.insert(cert.word.end(), it->word.begin(), it->word.end());
    cert.word.push_back(col->second);
  } else {
    cert.w0 = inst.w0;
    StateSet S = StateSet::singleton(A.n, inst.R.min_element());
    while (!(S == inst.R)) {
      ExpansionStep step = expand_once(A, S, inst.R, X, inst.c);
      S = step.S_after;
      cert.steps.push_back(std::move(step));
    }
    cert.word = inst.w0;  // Q w0 lies in R = S_{m+1}, then expansion words walk down
    for (auto it = cert.steps.rbegin(); it != cert.steps.rend(); ++it)
      cert.word.insert(cert.word.end(), it->word.begin(), it->word.end());
  }

  if (apply(A, StateSet::full(A.n), cert.word).size() != 1)
    throw InternalError("assembled word does not synchronize");
  if (static_cast<long long>(cert.word.size()) > cert.bound)
    throw InternalError("assembled word exceeds its certified bound");
  return cert;
}

SyncCertificate sync_pseudo_eulerian(const Automaton& A, const SyncOptions& opts) {
  A.validate();
  auto witness = pseudo_eulerian_witness(A);
  if (!witness)
    throw InapplicableError(
        "no strictly positive letter weighting makes the transition matrix doubly stochastic");
  AveragingInstance inst{A, WordDistribution::point_mass({}), StateSet::full(A.n), {}, 1};
  SyncCertificate cert =
      synchronize_core(inst, SyncMethod::pseudo_eulerian, opts.odd_r_improvement);
  if (opts.verify) {
    WordDistribution P2 =
        cesaro_average(witness->to_word_distribution(), A.n, opts.support_cap);
    HypothesesReport rep = verify_hypotheses(inst, P2, opts.support_cap);
    if (!rep.all_pass())
      throw InternalError("hypothesis audit failed on a doubly-stochastic instance");
    cert.hypotheses = rep;
  }
  return cert;
}

SyncCertificate sync_via_W(const Automaton& A, const UniformWSet& ws, const SyncOptions& opts) {
  A.validate();
  auto v = verify_uniform_W(A, ws.W, ws.k);
  if (!v) throw InputError("word set fails the uniform k-cover property");
  AveragingInstance inst{A, WordDistribution::uniform_on(v->W), v->R, v->W.front(), 2};
  SyncCertificate cert = synchronize_core(inst, SyncMethod::w_set, opts.odd_r_improvement);
  if (opts.verify) {
    std::optional<WordDistribution> P2;
    if (A.n >= 2) {
      std::vector<Word> letters;
      for (Letter a = 0; a < A.letters(); ++a) letters.push_back({a});
      P2 = cesaro_average(WordDistribution::uniform_on(letters), A.n - 1, opts.support_cap);
    }
    HypothesesReport rep = verify_hypotheses(inst, P2, opts.support_cap);
    if (!rep.all_pass()) throw InternalError("hypothesis audit failed on a word-set instance");
    cert.hypotheses = rep;
  }
  return cert;
}

SyncCertificate sync_one_cluster(const Automaton& A, const SyncOptions& opts) {
  A.validate();
  auto candidates = one_cluster_detect(A);
  if (candidates.empty())
    throw InapplicableError("no letter acts on the states with a single cycle");
  std::size_t best = 0;
  long long best_bound = 0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const std::uint32_t r = candidates[i].second.size();
    long long b = theorem_bound(A.n, r, 2, A.n - 1, A.n - r, r == A.n, opts.odd_r_improvement);
    if (i == 0 || b < best_bound) {
      best = i;
      best_bound = b;
    }
  }
  UniformWSet ws = one_cluster_W(A, candidates[best].first, candidates[best].second);
  SyncCertificate cert = sync_via_W(A, ws, opts);
  cert.method = SyncMethod::one_cluster;
  const long long family_bound = 2LL * A.n * A.n - 7LL * A.n + 8;
  if (static_cast<long long>(cert.word.size()) > family_bound)
    throw InternalError("one-cluster certificate exceeds the family bound");
  return cert;
}

RatVec gamma_vector(const StateSet& S, const StateSet& R) {
  if (S.universe() != R.universe()) throw InputError("set universes differ");
  if (R.empty()) throw InputError("R must be non-empty");
  if (!S.subset_of(R)) throw InputError("S must be a subset of R");
  const std::uint32_t n = S.universe();
  RatVec g(n, -rat(S.size(), R.size()));
  for (State q : S.elements()) g[q] += 1;
  return g;
}

std::optional<ChainWitness> expansion_chain_witness(const Automaton& A, const StateSet& S,
                                                    const StateSet& R,
                                                    const std::vector<Word>& X) {
  if (S.universe() != A.n || R.universe() != A.n)
    throw InputError("set universe does not match automaton");
  if (X.empty()) throw InputError("X must be non-empty");
  RatVec g = gamma_vector(S, R);
  std::vector<RatVec> seeds;
  seeds.reserve(X.size());
  for (const Word& x : X) {
    check_word(A, x);
    RatVec v(A.n);  // pi(x) gamma, componentwise gamma at q.x
    for (State q = 0; q < A.n; ++q) v[q] = g[apply(A, q, x)];
    seeds.push_back(std::move(v));
  }
  return ascending_chain_witness(A, seeds, char_vector(R, A.n), A.n);
}

}  // namespace synchrokit
