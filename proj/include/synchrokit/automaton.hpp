#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synchrokit/error.hpp"

namespace synchrokit {

using State = std::uint32_t;
using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// StateSet is a single machine word; desk-scale experiments stay well under this.
inline constexpr std::uint32_t kMaxStates = 64;

// Subset of {0..n-1} as a bitset over a fixed universe of n states.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::uint32_t n) : n_(n) { check_universe(n); }

  static StateSet full(std::uint32_t n) {
    StateSet s(n);
    s.bits_ = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }
  static StateSet of(std::uint32_t n, std::initializer_list<State> qs) {
    StateSet s(n);
    for (State q : qs) s.insert(q);
    return s;
  }
  static StateSet singleton(std::uint32_t n, State q) { return of(n, {q}); }
  static StateSet from_bits(std::uint32_t n, std::uint64_t bits) {
    StateSet s(n);
    s.bits_ = bits & full(n).bits_;
    return s;
  }

  bool contains(State q) const { return q < n_ && (bits_ >> q & 1); }
  void insert(State q) {
    if (q >= n_) throw InputError("state " + std::to_string(q) + " out of range");
    bits_ |= std::uint64_t{1} << q;
  }
  void erase(State q) {
    if (q < n_) bits_ &= ~(std::uint64_t{1} << q);
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(__builtin_popcountll(bits_)); }
  std::uint32_t universe() const { return n_; }
  bool empty() const { return bits_ == 0; }
  bool is_full() const { return *this == full(n_); }
  bool subset_of(const StateSet& o) const { return (bits_ & ~o.bits_) == 0; }
  std::uint64_t bits() const { return bits_; }

  StateSet operator&(const StateSet& o) const { return from_bits(n_, bits_ & o.bits_); }
  StateSet operator|(const StateSet& o) const { return from_bits(n_, bits_ | o.bits_); }
  bool operator==(const StateSet&) const = default;

  std::vector<State> elements() const {
    std::vector<State> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<State>(__builtin_ctzll(b)));
    return out;
  }
  State min_element() const {
    if (empty()) throw InputError("min_element of empty set");
    return static_cast<State>(__builtin_ctzll(bits_));
  }

  std::string str() const;  // "{0,2,3}"

 private:
  static void check_universe(std::uint32_t n) {
    if (n == 0 || n > kMaxStates)
      throw InputError("state count must be in [1," + std::to_string(kMaxStates) + "], got " + std::to_string(n));
  }
  std::uint64_t bits_ = 0;
  std::uint32_t n_ = 0;
};

// Complete deterministic automaton. Immutable after construction; all
// operations below are pure, so unlimited concurrent readers are safe.
struct Automaton {
  std::uint32_t n = 0;
  std::vector<std::string> alphabet;        // ordered, distinct letter names
  std::vector<std::vector<State>> delta;    // delta[q][a]

  std::uint32_t letters() const { return static_cast<std::uint32_t>(alphabet.size()); }
  void validate() const;  // throws InputError on any structural defect
};

Automaton make_automaton(std::uint32_t n, std::vector<std::string> alphabet,
                         std::vector<std::vector<State>> delta);

// Single-state action q.w (left to right: q.uv = (q.u).v).
State apply(const Automaton& A, State q, const Word& w);
// Image { q.w : q in S }.
StateSet apply(const Automaton& A, const StateSet& S, const Word& w);
// Preimage S w^-1 = { q : q.w in S }; anti-homomorphism: (uv)^-1 S = u^-1 (v^-1 S).
StateSet preimage(const Automaton& A, const StateSet& S, const Word& w);
StateSet preimage_letter(const Automaton& A, const StateSet& S, Letter a);

// q Sigma*: every state reachable from q (q itself included).
StateSet reachable_from(const Automaton& A, State q);
bool is_strongly_connected(const Automaton& A);

// Polynomial-time test via pair collapsibility; never runs the exponential oracle.
bool is_synchronizing(const Automaton& A);

// Some (q, a) with |q a^-1| >= 2, scanning states then letters in increasing
// order; absent iff every letter is a permutation.
std::optional<std::pair<State, Letter>> find_collapsing_letter(const Automaton& A);

void check_word(const Automaton& A, const Word& w);  // throws InputError on a bad letter index

}  // namespace synchrokit
