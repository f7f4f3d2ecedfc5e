#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "synchrokit/harness.hpp"
#include "synchrokit/io.hpp"

using namespace synchrokit;
using synchrokit::testing::demo;
using synchrokit::testing::w;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::string error_text(const std::string& json) {
  try {
    automaton_from_json_text(json);
    return "";
  } catch (const InputError& e) {
    return e.what();
  }
}

}  // namespace

TEST_CASE("JSON round trip preserves the automaton") {
  Automaton A = demo();
  Automaton back = automaton_from_json_text(automaton_to_json_text(A));
  CHECK(back.n == A.n);
  CHECK(back.alphabet == A.alphabet);
  CHECK(back.delta == A.delta);
}

TEST_CASE("shipped data files match the frozen instances") {
  std::filesystem::path root = SYNCHROKIT_SOURCE_DIR;
  Automaton d = load_automaton((root / "data" / "demo_pseudo_eulerian.json").string());
  CHECK(d.delta == demo().delta);
  CHECK(d.alphabet == demo().alphabet);
  Automaton c = load_automaton((root / "data" / "cerny4.json").string());
  CHECK(c.delta == cerny_automaton(4).delta);
}

TEST_CASE("malformed input reports the file and line") {
  CHECK(contains(error_text("{"), "<string>"));
  CHECK(contains(error_text("{"), "malformed JSON"));
  // the defect sits on line 2
  CHECK(contains(error_text("{\n  \"n\": }"), ":2"));

  CHECK_THROWS_AS(load_automaton("/nonexistent/automaton.json"), InputError);
}

TEST_CASE("structural validation of the JSON shape") {
  // baseline accepted text
  std::string good = R"({"n": 2, "alphabet": ["a"], "delta": [[1], [0]]})";
  CHECK(automaton_from_json_text(good).n == 2);

  CHECK(contains(error_text(R"(["array"])"), "object"));
  CHECK(contains(error_text(R"({"alphabet": ["a"], "delta": [[0]]})"), "n"));
  CHECK(contains(error_text(R"({"n": 1, "delta": [[0]]})"), "alphabet"));
  CHECK(contains(error_text(R"({"n": 1, "alphabet": ["a"]})"), "delta"));
  // unknown keys are rejected, not ignored
  CHECK(contains(error_text(R"({"n": 1, "alphabet": ["a"], "delta": [[0]], "x": 1})"), "x"));
  // n bounds
  CHECK(error_text(R"({"n": 0, "alphabet": ["a"], "delta": []})") != "");
  CHECK(error_text(R"({"n": -3, "alphabet": ["a"], "delta": []})") != "");
  // delta shape and range
  CHECK(error_text(R"({"n": 2, "alphabet": ["a"], "delta": [[0]]})") != "");
  CHECK(error_text(R"({"n": 2, "alphabet": ["a"], "delta": [[0], [2]]})") != "");
  CHECK(error_text(R"({"n": 2, "alphabet": ["a"], "delta": [[0], [-1]]})") != "");
  // alphabet entries must be strings, distinct, free of the separator
  CHECK(error_text(R"({"n": 1, "alphabet": [3], "delta": [[0]]})") != "");
  CHECK(error_text(R"({"n": 1, "alphabet": ["a", "a"], "delta": [[0, 0]]})") != "");
  CHECK(error_text(R"({"n": 1, "alphabet": ["a.b"], "delta": [[0]]})") != "");
}

TEST_CASE("save and load through the filesystem") {
  namespace fs = std::filesystem;
  fs::path tmp = fs::temp_directory_path() / "synchrokit_io_test.json";
  Automaton A = cerny_automaton(5);
  save_automaton(A, tmp.string());
  Automaton back = load_automaton(tmp.string());
  CHECK(back.delta == A.delta);
  std::remove(tmp.string().c_str());

  CHECK_THROWS_AS(save_automaton(A, "/nonexistent/dir/out.json"), InputError);
}

TEST_CASE("DOT export lists every state and groups parallel edges") {
  Automaton A = demo();
  std::string dot = to_dot(A);
  CHECK(contains(dot, "digraph"));
  for (State q = 0; q < 4; ++q) CHECK(contains(dot, "  " + std::to_string(q) + ";"));
  // 2 -a-> 3 and 3 -c-> 0
  CHECK(contains(dot, "2 -> 3 [label=\"a\"]"));
  CHECK(contains(dot, "3 -> 0 [label=\"c\"]"));
  // 0 -a-> 0 and nothing else from 0 to 0
  CHECK(contains(dot, "0 -> 0 [label=\"a\"]"));

  // parallel edges collapse into one comma-joined label
  Automaton P = make_automaton(2, {"x", "y"}, {{1, 1}, {0, 0}});
  std::string pd = to_dot(P);
  CHECK(contains(pd, "0 -> 1 [label=\"x,y\"]"));

  // quotes in names are escaped
  Automaton Q = make_automaton(1, {"\"q\""}, {{0}});
  CHECK(contains(to_dot(Q), "\\\""));
}

TEST_CASE("format_word and parse_word round trip") {
  Automaton A = demo();
  CHECK(format_word(A, w(A, "cb")) == "cb");
  CHECK(format_word(A, Word{}) == "");
  CHECK(parse_word(A, "") == Word{});
  CHECK(parse_word(A, "-") == Word{});
  CHECK(parse_word(A, "cb") == Word{2, 1});
  CHECK(parse_word(A, "c.b") == Word{2, 1});
  CHECK_THROWS_AS(parse_word(A, "cq"), InputError);
  CHECK_THROWS_AS(parse_word(A, "c.q"), InputError);

  // multi-character names force the dotted form
  Automaton M = make_automaton(2, {"x", "yy"}, {{1, 0}, {0, 1}});
  CHECK(format_word(M, Word{0, 1, 0}) == "x.yy.x");
  CHECK(parse_word(M, "x.yy.x") == Word{0, 1, 0});
  CHECK(parse_word(M, "x") == Word{0});
  // a whole-alphabet name wins over per-character reading
  Automaton N = make_automaton(1, {"ab", "a"}, {{0, 0}});
  CHECK(parse_word(N, "ab") == Word{0});
  CHECK(parse_word(N, "a") == Word{1});
  CHECK(parse_word(N, "a.ab") == Word{1, 0});

  // "-" names a letter: it is that letter, not the empty word
  Automaton D = make_automaton(1, {"-"}, {{0}});
  CHECK(parse_word(D, "-") == Word{0});

  // round trip through the formatter for random words
  for (const Word& word : {Word{}, Word{0}, Word{2, 1, 0, 1}}) {
    CHECK(parse_word(A, format_word(A, word)) == word);
    CHECK(parse_word(M, format_word(M, word.size() > 2 ? Word{0, 1} : word)) ==
          (word.size() > 2 ? Word{0, 1} : word));
  }
}
