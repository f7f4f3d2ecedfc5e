#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "synchrokit/automaton.hpp"
#include "synchrokit/rational.hpp"
#include "synchrokit/word_distribution.hpp"

namespace synchrokit {

// Strongly connected and every state has in-degree |Sigma| counted with
// multiplicity (out-degree is |Sigma| by completeness).
bool is_eulerian(const Automaton& A);

// A probability on the alphabet itself: p[a] > 0 for every letter, sum 1.
struct LetterDistribution {
  std::vector<Rat> p;  // indexed by letter
  WordDistribution to_word_distribution() const;
};

// A strictly positive solution of the system { sum_a p_a = 1 } together with
// { sum_a p_a |q a^-1| = 1 for every state q }, i.e. letter weights making the
// one-step transition matrix doubly stochastic. Solved as an exact LP:
// maximize t subject to the equalities and p_a >= t; a witness exists iff the
// automaton is strongly connected and the optimum t* is > 0.
std::optional<LetterDistribution> pseudo_eulerian_witness(const Automaton& A);

// Letters whose functional graph has exactly one cycle, with that cycle's
// state set; ordered by letter index.
std::vector<std::pair<Letter, StateSet>> one_cluster_detect(const Automaton& A);

// A set of words W with |W| = k|R| for R = QW such that every state is taken
// to every element of R by exactly k words of W.
struct UniformWSet {
  std::vector<Word> W;  // shortlex-sorted, duplicate-free
  std::uint32_t k = 0;
  StateSet R;           // = QW
  std::size_t ell = 0;  // shortest word length in W
  std::size_t L = 0;    // longest word length in W
};

// Validates the exact-k property and assembles the record; absent when the
// property fails (or W has duplicates). k = 0 auto-detects |W| / |QW|, which
// must divide evenly. W must be non-empty.
std::optional<UniformWSet> verify_uniform_W(const Automaton& A, const std::vector<Word>& W,
                                            std::uint32_t k = 0);

// W = {a^(n-r), ..., a^(n-1)} for a one-cluster letter a with cycle R,
// |R| = r: all n states have entered the cycle after n-r steps, and the next
// r powers visit each cycle state exactly once. (a, R) must come from
// one_cluster_detect; the result is re-validated and a failure throws
// InternalError (a detector bug, not bad input).
UniformWSet one_cluster_W(const Automaton& A, Letter a, const StateSet& R);

}  // namespace synchrokit
