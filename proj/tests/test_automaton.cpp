#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "synchrokit/automaton.hpp"
#include "synchrokit/error.hpp"
#include "synchrokit/harness.hpp"

using namespace synchrokit;
using synchrokit::testing::demo;
using synchrokit::testing::w;

TEST_CASE("state sets: construction and set algebra") {
  StateSet e = StateSet::of(5, {});
  CHECK(e.empty());
  CHECK(e.size() == 0);

  StateSet s = StateSet::of(5, {1, 3});
  CHECK(s.size() == 2);
  CHECK(s.contains(1));
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(0));
  CHECK(s.min_element() == 1);
  CHECK(s.elements() == std::vector<State>{1, 3});
  CHECK(s.str() == "{1,3}");

  StateSet q = StateSet::full(5);
  CHECK(q.is_full());
  CHECK(q.size() == 5);
  CHECK(s.subset_of(q));
  CHECK_FALSE(q.subset_of(s));
  CHECK((s & q) == s);
  CHECK((s | StateSet::singleton(5, 0)) == StateSet::of(5, {0, 1, 3}));

  s.erase(3);
  s.insert(4);
  CHECK(s == StateSet::of(5, {1, 4}));
}

TEST_CASE("make_automaton validates its input") {
  CHECK_THROWS_AS(make_automaton(0, {"a"}, {}), InputError);
  CHECK_THROWS_AS(make_automaton(65, {"a"}, std::vector<std::vector<State>>(65, {0})),
                  InputError);
  CHECK_THROWS_AS(make_automaton(2, {}, {{}, {}}), InputError);
  // duplicate letter names
  CHECK_THROWS_AS(make_automaton(1, {"a", "a"}, {{0, 0}}), InputError);
  // empty letter name
  CHECK_THROWS_AS(make_automaton(1, {""}, {{0}}), InputError);
  // '.' is the word separator and cannot appear in a letter name
  CHECK_THROWS_AS(make_automaton(1, {"x.y"}, {{0}}), InputError);
  // wrong number of rows
  CHECK_THROWS_AS(make_automaton(2, {"a"}, {{0}}), InputError);
  // ragged row
  CHECK_THROWS_AS(make_automaton(2, {"a", "b"}, {{0}, {1, 0}}), InputError);
  // target out of range
  CHECK_THROWS_AS(make_automaton(2, {"a"}, {{0}, {2}}), InputError);

  Automaton A = make_automaton(2, {"x", "yy"}, {{1, 0}, {0, 1}});
  CHECK(A.n == 2);
  CHECK(A.letters() == 2);
  CHECK(A.alphabet[1] == "yy");
}

TEST_CASE("apply walks transitions; the empty word is the identity") {
  Automaton A = demo();
  CHECK(apply(A, 0, Word{}) == 0);
  CHECK(apply(A, 0, w(A, "c")) == 2);
  CHECK(apply(A, 3, w(A, "c")) == 0);
  CHECK(apply(A, 2, w(A, "ab")) == 1);  // 2 -a-> 3 -b-> 1

  CHECK(apply(A, StateSet::full(4), w(A, "c")) == StateSet::of(4, {0, 2}));
  CHECK(apply(A, StateSet::of(4, {0, 2}), w(A, "c")) == StateSet::singleton(4, 2));
  CHECK(apply(A, StateSet::full(4), w(A, "cc")).size() == 1);

  CHECK_THROWS_AS(apply(A, 4, Word{}), InputError);
  CHECK_THROWS_AS(apply(A, 0, Word{7}), InputError);
}

TEST_CASE("preimage collects exactly the states a word maps in") {
  Automaton A = demo();
  CHECK(preimage(A, StateSet::singleton(4, 2), w(A, "c")) == StateSet::of(4, {0, 1, 2}));
  CHECK(preimage(A, StateSet::of(4, {0, 2, 3}), w(A, "c")) == StateSet::full(4));
  CHECK(preimage(A, StateSet::singleton(4, 1), w(A, "b")) == StateSet::of(4, {0, 2, 3}));
  // preimage then apply lands inside the set
  StateSet S = StateSet::of(4, {1, 3});
  Word word = w(A, "bca");
  CHECK(apply(A, preimage(A, S, word), word).subset_of(S));
}

TEST_CASE("reachability and strong connectivity") {
  Automaton A = demo();
  CHECK(reachable_from(A, 0) == StateSet::full(4));
  CHECK(is_strongly_connected(A));

  // 0 and 1 trade places but 2 is a sink: not strongly connected
  Automaton B = make_automaton(3, {"a"}, {{1}, {2}, {2}});
  CHECK_FALSE(is_strongly_connected(B));
  CHECK(reachable_from(B, 2) == StateSet::singleton(3, 2));
}

TEST_CASE("is_synchronizing matches the pair-collapse criterion") {
  CHECK(is_synchronizing(demo()));
  CHECK(is_synchronizing(cerny_automaton(4)));
  CHECK(is_synchronizing(make_automaton(1, {"a"}, {{0}})));

  // permutation letters only: nothing ever collapses
  Automaton P = make_automaton(2, {"a", "b"}, {{1, 0}, {0, 1}});
  CHECK_FALSE(is_synchronizing(P));
}

TEST_CASE("find_collapsing_letter scans states first, then letters") {
  Automaton A = demo();
  auto pair = find_collapsing_letter(A);
  REQUIRE(pair.has_value());
  CHECK(pair->first == 1);
  CHECK(A.alphabet[pair->second] == "b");
  CHECK(preimage_letter(A, StateSet::singleton(4, pair->first), pair->second).size() >= 2);

  auto c4 = find_collapsing_letter(cerny_automaton(4));
  REQUIRE(c4.has_value());
  CHECK(c4->first == 1);
  CHECK(c4->second == 1);  // letter b

  // permutations have no collapsing pair
  Automaton P = make_automaton(3, {"a"}, {{1}, {2}, {0}});
  CHECK_FALSE(find_collapsing_letter(P).has_value());
}

TEST_CASE("check_word rejects letters outside the alphabet") {
  Automaton A = demo();
  CHECK_NOTHROW(check_word(A, w(A, "abc")));
  CHECK_THROWS_AS(check_word(A, Word{3}), InputError);
}
