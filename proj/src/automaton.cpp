#include "synchrokit/automaton.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace synchrokit {

std::string StateSet::str() const {
  std::string out = "{";
  bool first = true;
  for (State q : elements()) {
    if (!first) out += ",";
    out += std::to_string(q);
    first = false;
  }
  return out + "}";
}

void Automaton::validate() const {
  if (n == 0) throw InputError("automaton must have at least one state");
  if (n > kMaxStates)
    throw InputError("state count " + std::to_string(n) + " exceeds the core cap of " +
                     std::to_string(kMaxStates));
  if (alphabet.empty()) throw InputError("alphabet must be non-empty");
  std::set<std::string> names(alphabet.begin(), alphabet.end());
  if (names.size() != alphabet.size()) throw InputError("alphabet names must be distinct");
  for (const auto& name : alphabet) {
    if (name.empty()) throw InputError("alphabet names must be non-empty");
    if (name.find('.') != std::string::npos)
      throw InputError("alphabet names must not contain '.' (reserved as the word separator)");
  }
  if (delta.size() != n) throw InputError("delta must have one row per state");
  for (std::uint32_t q = 0; q < n; ++q) {
    if (delta[q].size() != alphabet.size())
      throw InputError("delta row " + std::to_string(q) + " must have one entry per letter");
    for (State to : delta[q])
      if (to >= n)
        throw InputError("delta entry " + std::to_string(to) + " out of range at state " +
                         std::to_string(q));
  }
}

Automaton make_automaton(std::uint32_t n, std::vector<std::string> alphabet,
                         std::vector<std::vector<State>> delta) {
  Automaton A{n, std::move(alphabet), std::move(delta)};
  A.validate();
  return A;
}

void check_word(const Automaton& A, const Word& w) {
  for (Letter a : w)
    if (a >= A.letters())
      throw InputError("letter index " + std::to_string(a) + " out of range for alphabet of size " +
                       std::to_string(A.letters()));
}

State apply(const Automaton& A, State q, const Word& w) {
  check_word(A, w);
  if (q >= A.n) throw InputError("state out of range");
  for (Letter a : w) q = A.delta[q][a];
  return q;
}

StateSet apply(const Automaton& A, const StateSet& S, const Word& w) {
  check_word(A, w);
  StateSet cur = S;
  for (Letter a : w) {
    StateSet next(A.n);
    for (State q : cur.elements()) next.insert(A.delta[q][a]);
    cur = next;
  }
  return cur;
}

StateSet preimage_letter(const Automaton& A, const StateSet& S, Letter a) {
  if (a >= A.letters()) throw InputError("letter index out of range");
  StateSet out(A.n);
  for (State q = 0; q < A.n; ++q)
    if (S.contains(A.delta[q][a])) out.insert(q);
  return out;
}

StateSet preimage(const Automaton& A, const StateSet& S, const Word& w) {
  check_word(A, w);
  StateSet cur = S;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = preimage_letter(A, cur, *it);
  return cur;
}

StateSet reachable_from(const Automaton& A, State q) {
  if (q >= A.n) throw InputError("state out of range");
  StateSet seen = StateSet::singleton(A.n, q);
  std::queue<State> bfs;
  bfs.push(q);
  while (!bfs.empty()) {
    State cur = bfs.front();
    bfs.pop();
    for (State to : A.delta[cur]) {
      if (!seen.contains(to)) {
        seen.insert(to);
        bfs.push(to);
      }
    }
  }
  return seen;
}

bool is_strongly_connected(const Automaton& A) {
  if (A.n == 1) return true;
  if (!reachable_from(A, 0).is_full()) return false;
  // reverse reachability from state 0
  std::vector<std::vector<State>> rev(A.n);
  for (State q = 0; q < A.n; ++q)
    for (State to : A.delta[q]) rev[to].push_back(q);
  StateSet seen = StateSet::singleton(A.n, 0);
  std::queue<State> bfs;
  bfs.push(0);
  while (!bfs.empty()) {
    State cur = bfs.front();
    bfs.pop();
    for (State from : rev[cur]) {
      if (!seen.contains(from)) {
        seen.insert(from);
        bfs.push(from);
      }
    }
  }
  return seen.is_full();
}

bool is_synchronizing(const Automaton& A) {
  const std::uint32_t n = A.n;
  if (n == 1) return true;
  // Pair test: synchronizing iff every unordered pair {p,q} can be collapsed.
  // BFS backward from the directly-collapsible pairs.
  auto idx = [n](State p, State q) { return p * n + q; };  // p < q
  std::vector<std::vector<std::uint32_t>> rev(n * n);
  std::vector<char> good(n * n, 0);
  std::queue<std::uint32_t> bfs;
  for (State p = 0; p < n; ++p) {
    for (State q = p + 1; q < n; ++q) {
      for (Letter a = 0; a < A.letters(); ++a) {
        State pa = A.delta[p][a], qa = A.delta[q][a];
        if (pa == qa) {
          if (!good[idx(p, q)]) {
            good[idx(p, q)] = 1;
            bfs.push(idx(p, q));
          }
        } else {
          if (pa > qa) std::swap(pa, qa);
          rev[idx(pa, qa)].push_back(idx(p, q));
        }
      }
    }
  }
  std::uint32_t good_count = 0;
  while (!bfs.empty()) {
    std::uint32_t cur = bfs.front();
    bfs.pop();
    ++good_count;
    for (std::uint32_t pred : rev[cur]) {
      if (!good[pred]) {
        good[pred] = 1;
        bfs.push(pred);
      }
    }
  }
  return good_count == n * (n - 1) / 2;
}

std::optional<std::pair<State, Letter>> find_collapsing_letter(const Automaton& A) {
  for (State q = 0; q < A.n; ++q) {
    for (Letter a = 0; a < A.letters(); ++a) {
      std::uint32_t count = 0;
      for (State s = 0; s < A.n; ++s)
        if (A.delta[s][a] == q) ++count;
      if (count >= 2) return std::make_pair(q, a);
    }
  }
  return std::nullopt;
}

}  // namespace synchrokit
