#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "synchrokit/automaton.hpp"
#include "synchrokit/io.hpp"

namespace synchrokit::testing {

// The running example used throughout the suite: 4 states, letters a/b/c.
// a fixes 0 and 1 and sends 2,3 to 3; b swaps 0,1 and sends 2,3 to 1;
// c sends 0,1,2 to 2 and 3 to 0. Pseudo-Eulerian but not Eulerian; b and c
// are one-cluster letters; a is not (three cycles).
inline Automaton demo() {
  return make_automaton(4, {"a", "b", "c"},
                        {{0, 1, 2}, {1, 0, 2}, {3, 1, 2}, {3, 1, 0}});
}

// Word literal for single-character letter names: w(A, "cb") = [2, 1].
inline Word w(const Automaton& A, const std::string& text) { return parse_word(A, text); }

// a^e as a word.
inline Word power(Letter a, std::size_t e) { return Word(e, a); }

}  // namespace synchrokit::testing
