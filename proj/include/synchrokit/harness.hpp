#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synchrokit/automaton.hpp"
#include "synchrokit/averaging.hpp"

namespace synchrokit {

// Ground truth: a shortest synchronizing word (lexicographically least among
// the shortest), or absent when none exists. Breadth-first search over the
// subset lattice; exponential, so state counts above max_n are refused.
std::optional<Word> oracle_shortest_sync(const Automaton& A, std::uint32_t max_n = 20);

// The classical slowly-synchronizing family on letters {a, b}: a cycles
// 0 -> 1 -> ... -> n-1 -> 0, b sends 0 to 1 and fixes the rest. Its shortest
// synchronizing word has length exactly (n-1)^2. Requires n >= 2.
Automaton cerny_automaton(std::uint32_t n);

enum class Family { strongly_connected, eulerian, one_cluster };
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// "a", "b", ..., "z", then "a26", "a27", ...
std::vector<std::string> default_alphabet(std::uint32_t k);

// Deterministic in (f, n, k, seed); the produced automaton provably belongs
// to the requested family (generated, then re-checked with the detectors).
// Throws InapplicableError when rejection sampling exhausts its retry budget.
Automaton gen_random(Family f, std::uint32_t n, std::uint32_t k, std::uint64_t seed);

// One row per (automaton, method). Absent lengths mean the method was
// skipped; status carries "ok" or the skip reason.
struct BenchRecord {
  std::string family;
  std::uint32_t n = 0;
  std::string method;
  std::optional<std::size_t> word_length;
  std::optional<long long> bound;
  std::optional<std::size_t> oracle_length;
  double seconds = 0.0;
  std::string status;

  bool ok() const { return status == "ok"; }
};

struct BenchSpec {
  std::vector<std::string> families;  // "cerny" or a random family name
  std::vector<std::pair<std::string, Automaton>> files;  // (label, automaton)
  std::uint32_t n_lo = 0, n_hi = 0;   // inclusive range for families
  std::vector<SyncMethod> methods;    // pseudo_eulerian and/or one_cluster
  bool with_oracle = false;
  std::uint32_t k = 2;                // alphabet size for random families
  std::uint64_t seed = 1;
  std::uint32_t oracle_max_n = 20;
};

// Builds every requested instance, runs every requested method on each, and
// captures per-record failures as skips (nothing here is fatal except a
// malformed spec). Oracle lengths are computed once per automaton when
// enabled and the state count fits the cap.
std::vector<BenchRecord> bench_run(const BenchSpec& spec);

}  // namespace synchrokit
