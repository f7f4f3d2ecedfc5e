#pragma once

#include <string>

#include "synchrokit/automaton.hpp"

namespace synchrokit {

// Automaton file format (JSON):
//   {"n": <states>, "alphabet": ["a", ...], "delta": [[<to> per letter] per state]}
// 0-indexed states, delta[q][i] = destination of q under letter i. Unknown
// keys are rejected. Parse errors carry file/line context in an InputError.
Automaton automaton_from_json_text(const std::string& text,
                                   const std::string& origin = "<string>");
std::string automaton_to_json_text(const Automaton& A);

Automaton load_automaton(const std::string& path);
void save_automaton(const Automaton& A, const std::string& path);

// Graphviz digraph; parallel edges between the same pair of states merge
// into one edge labeled with the letter names in alphabet order.
std::string to_dot(const Automaton& A);

// Words print as concatenated letter names, joined with '.' when any
// alphabet name is longer than one character; the empty word prints as "".
std::string format_word(const Automaton& A, const Word& w);

// Inverse of format_word, accepting either style: '.'-separated names, or
// one-character-per-letter when all names are single characters, or a single
// bare name. "-" denotes the empty word (unless "-" names a letter).
Word parse_word(const Automaton& A, const std::string& text);

}  // namespace synchrokit
