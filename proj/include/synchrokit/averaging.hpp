#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synchrokit/automaton.hpp"
#include "synchrokit/class_detect.hpp"
#include "synchrokit/linalg.hpp"
#include "synchrokit/word_distribution.hpp"

namespace synchrokit {

// The averaging engine: builds synchronizing words by repeated inverse-image
// expansion. An instance fixes the data the expansion argument needs: a
// probability P1 whose support X supplies the expansion suffixes, a target
// set R reachable from each of its own states, a word w0 taking every state
// into R, and the constant c in {1, 2} controlling the prefix length cap.
struct AveragingInstance {
  Automaton A;
  WordDistribution P1;
  StateSet R;
  Word w0;            // must satisfy Q w0 subset of R; empty allowed when R = Q
  std::uint32_t c = 1;

  std::size_t L() const { return P1.max_word_length(); }
  std::size_t ell() const { return w0.size(); }
  bool R_equals_Q() const { return R.is_full(); }
};

// Pass/fail per hypothesis the engine's guarantees rest on. With P2 given,
// hypothesis (1) is: support(P2) = Sigma^(<= n-c) exactly and [R] applied to
// the matrix of P2 P1 reproduces [R]. Without P2, the checked sufficient
// condition is [R] times the matrix of P1 alone equals [R] (any row-stochastic
// P2 on Sigma^(<= n-c) then works).
struct HypothesesReport {
  bool p2_given = false;
  bool p2_support_ok = false;   // trivially true when P2 is absent
  bool fixes_R = false;
  bool R_reachable = false;     // R subset of reachable_from(q) for every q in R
  bool w0_maps_into_R = false;  // Q w0 subset of R
  bool all_pass() const { return p2_support_ok && fixes_R && R_reachable && w0_maps_into_R; }
};

HypothesesReport verify_hypotheses(const AveragingInstance& inst,
                                   const std::optional<WordDistribution>& P2,
                                   std::size_t support_cap = kDefaultSupportCap);

// Exact evaluation of the condition selecting c: returns 2 iff for every
// proper non-empty S strictly inside R some pair of words in X has distinct
// full preimages of S (vacuously 2 when |R| = 1), else 1. Exponential in |R|;
// refuses |R| > cap.
std::uint32_t compute_c_bruteforce(const Automaton& A, const std::vector<Word>& X,
                                   const StateSet& R, std::uint32_t cap = 20);

// Z_S(w) = |S w^-1 intersect R|. Requires S subset of R.
std::uint32_t zscore(const Automaton& A, const StateSet& S, const StateSet& R, const Word& w);

// One inverse-image expansion step: S grew to S_after = preimage(S_before, word)
// intersect R, with |S_after| > |S_before| and |word| <= length_cap_used.
struct ExpansionStep {
  StateSet S_before;
  Word word;
  StateSet S_after;
  std::size_t length_cap_used = 0;
};

// Finds the first word w = u x (u a prefix over Sigma, x in X) with
// zscore(S, R, w) > |S|, scanning prefixes in shortlex order and, within a
// prefix, X in the given order. |u| is capped at n-c, relaxed to n-1 in the
// one unavoidable edge case c = 2 with |S| = |R|/2. The averaging argument
// guarantees a hit under the instance hypotheses, so an exhausted search
// throws InternalError (diagnostic of a hypothesis violation).
ExpansionStep expand_once(const Automaton& A, const StateSet& S, const StateSet& R,
                          const std::vector<Word>& X, std::uint32_t c);

enum class SyncMethod { pseudo_eulerian, w_set, one_cluster, custom };
std::string method_name(SyncMethod m);

struct SyncCertificate {
  Word word;                                       // synchronizing: |Q word| = 1
  std::vector<ExpansionStep> steps;                // in discovery order
  std::optional<std::pair<State, Letter>> initial; // collapsing pair (R = Q route)
  Word w0;                                         // leading word (R proper route)
  long long bound = 0;                             // |word| <= bound, enforced
  SyncMethod method = SyncMethod::custom;
  std::optional<HypothesesReport> hypotheses;      // attached in verification mode
};

// The quoted length bounds. R = Q: c + (n-2)(n-c+L); proper R:
// (r-1)(n-c+L) + ell + c - 1. With r_odd_improvement and odd r the additive
// constant drops: 1 + (n-2)(n-c+L), resp. (r-1)(n-c+L) + ell.
long long theorem_bound(std::uint32_t n, std::uint32_t r, std::uint32_t c, std::size_t L,
                        std::size_t ell, bool R_equals_Q, bool r_odd_improvement = false);

// Full assembly. R = Q: collapse some pair with a letter a (smallest state,
// then smallest letter), set S1 = preimage of the collapsed state under a,
// expand until S = Q; word is the expansion words reversed, then a. Proper R:
// start from the smallest state of R, expand inside R until S = R; word is w0,
// then the expansion words reversed. Enforces |Q word| = 1 and |word| <= bound.
SyncCertificate synchronize_core(const AveragingInstance& inst,
                                 SyncMethod method = SyncMethod::custom,
                                 bool r_odd_improvement = false);

struct SyncOptions {
  bool verify = false;             // materialize P2, audit hypotheses, attach report
  bool odd_r_improvement = false;  // opt into the improved odd-r bounds
  std::size_t support_cap = kDefaultSupportCap;
};

// P1 = point mass on the empty word, R = Q, c = 1: works exactly when a
// strictly positive letter weighting makes the one-step matrix doubly
// stochastic. Bound 1 + (n-2)(n-1). Verification mode materializes
// P2 = cesaro_average(witness, n).
SyncCertificate sync_pseudo_eulerian(const Automaton& A, const SyncOptions& opts = {});

// P1 uniform on a validated uniform word set W, R = QW, c = 2, w0 = the
// lexicographically least shortest word of W. Verification mode uses
// P2 = cesaro_average(uniform on Sigma, n-1), whose support is Sigma^(<= n-2).
SyncCertificate sync_via_W(const Automaton& A, const UniformWSet& ws,
                           const SyncOptions& opts = {});

// Picks the one-cluster letter whose power set gives the smallest bound
// (ties: letter order) and runs sync_via_W on it. The result always fits the
// overall one-cluster bound 2n^2 - 7n + 8.
SyncCertificate sync_one_cluster(const Automaton& A, const SyncOptions& opts = {});

// gamma = [S]^T - (|S|/|R|)[Q]^T, the centered column vector with
// [R] pi(w) gamma = zscore(S, R, w) - |S| for every word w.
RatVec gamma_vector(const StateSet& S, const StateSet& R);

// Algebraic cross-check of the expansion length cap: seeds the ascending
// chain with { pi(x) gamma : x in X } against the functional [R]. A witness
// (u, i) proves zscore(S, R, u X[i]) differs from |S| with |u| bounded by
// n - dim span(seeds); absent means the chain stabilized inside the
// hyperplane, which contradicts the instance hypotheses.
std::optional<ChainWitness> expansion_chain_witness(const Automaton& A, const StateSet& S,
                                                    const StateSet& R,
                                                    const std::vector<Word>& X);

}  // namespace synchrokit
