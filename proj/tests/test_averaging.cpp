#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "synchrokit/averaging.hpp"
#include "synchrokit/harness.hpp"

using namespace synchrokit;
using synchrokit::testing::demo;
using synchrokit::testing::power;
using synchrokit::testing::w;

TEST_CASE("zscore counts the preimage inside the target set") {
  Automaton A = demo();
  CHECK(zscore(A, StateSet::singleton(4, 2), StateSet::full(4), w(A, "c")) == 3);
  CHECK(zscore(A, StateSet::of(4, {0, 2}), StateSet::full(4), Word{}) == 2);
  CHECK(zscore(A, StateSet::singleton(4, 0), StateSet::of(4, {0, 1}), w(A, "bbb")) == 1);
  CHECK_THROWS_AS(zscore(A, StateSet::singleton(4, 3), StateSet::of(4, {0, 1}), Word{}),
                  InputError);
}

TEST_CASE("gamma_vector satisfies the centering identity for every word") {
  Automaton A = demo();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    StateSet R = StateSet::from_bits(4, 1 + rng() % 15);
    std::uint64_t sbits = rng() & R.bits();
    if (sbits == 0) continue;
    StateSet S = StateSet::from_bits(4, sbits);
    Word word(rng() % 5);
    for (auto& l : word) l = static_cast<Letter>(rng() % 3);

    RatVec gamma = gamma_vector(S, R);
    Rat lhs = dot(row_times(char_vector(R, 4), word_matrix(A, word)), gamma);
    CHECK(lhs == rat(zscore(A, S, R, word)) - rat(S.size()));
  }
}

TEST_CASE("compute_c_bruteforce evaluates the distinct-preimage condition") {
  Automaton A = demo();
  Automaton C = cerny_automaton(4);

  // a single word can never produce two distinct preimages
  CHECK(compute_c_bruteforce(A, {Word{}}, StateSet::full(4)) == 1);
  // powers of the full cycle shift every subset around: always distinct
  CHECK(compute_c_bruteforce(C, {Word{}, power(0, 1), power(0, 2), power(0, 3)},
                             StateSet::full(4)) == 2);
  // the demo cluster words separate {0} (preimages {0,2,3} vs {1})
  CHECK(compute_c_bruteforce(A, {w(A, "bb"), w(A, "bbb")}, StateSet::of(4, {0, 1})) == 2);
  // vacuous on a singleton target
  CHECK(compute_c_bruteforce(A, {w(A, "ccc")}, StateSet::singleton(4, 2)) == 2);

  CHECK_THROWS_AS(compute_c_bruteforce(cerny_automaton(22), {Word{}}, StateSet::full(22)),
                  InapplicableError);
}

TEST_CASE("expand_once follows the documented scan order") {
  Automaton A = demo();
  std::vector<Word> eps{Word{}};

  ExpansionStep s1 = expand_once(A, StateSet::singleton(4, 2), StateSet::full(4), eps, 1);
  CHECK(s1.word == w(A, "c"));
  CHECK(s1.S_after == StateSet::of(4, {0, 1, 2}));
  CHECK(s1.length_cap_used == 3);  // |u| <= n - c = 3, L = 0

  // both b and c would reach Q from {0,1,2}; b wins by letter order
  ExpansionStep s2 = expand_once(A, StateSet::of(4, {0, 1, 2}), StateSet::full(4), eps, 1);
  CHECK(s2.word == w(A, "b"));
  CHECK(s2.S_after == StateSet::full(4));

  ExpansionStep s3 = expand_once(A, StateSet::of(4, {0, 2, 3}), StateSet::full(4), eps, 1);
  CHECK(s3.word == w(A, "c"));
  CHECK(s3.S_after == StateSet::full(4));
}

TEST_CASE("expand_once: the half-size edge case relaxes the prefix cap") {
  Automaton A = demo();
  std::vector<Word> X{w(A, "bb"), w(A, "bbb")};
  StateSet R = StateSet::of(4, {0, 1});

  ExpansionStep st = expand_once(A, StateSet::singleton(4, 0), R, X, 2);
  // |S| = 1 = r/2: cap on |u| is n-1 = 3 rather than n-2, so the total is 3 + L = 6
  CHECK(st.length_cap_used == 6);
  CHECK(st.word.size() <= 6);
  CHECK(st.S_after == R);
  CHECK(zscore(A, StateSet::singleton(4, 0), R, st.word) == 2);

  // exhaustion is an internal error, not a silent miss: a permutation letter
  // can never grow any preimage
  Automaton P = make_automaton(3, {"a"}, {{1}, {2}, {0}});
  CHECK_THROWS_AS(
      expand_once(P, StateSet::singleton(3, 0), StateSet::full(3), {Word{}}, 1),
      InternalError);
}

TEST_CASE("theorem_bound reproduces the closed forms") {
  // full target: c + (n-2)(n-c+L)
  CHECK(theorem_bound(4, 4, 1, 0, 0, true) == 7);
  CHECK(theorem_bound(4, 4, 2, 3, 0, true) == 12);  // 2n^2-7n+8 at n=4
  CHECK(theorem_bound(10, 10, 2, 9, 0, true) == 2 * 100 - 70 + 8);
  // proper target: (r-1)(n-c+L) + ell + c - 1
  CHECK(theorem_bound(4, 2, 2, 3, 2, false) == 8);
  CHECK(theorem_bound(4, 1, 2, 3, 3, false) == 4);
  // odd-r improvement drops the additive constant
  CHECK(theorem_bound(5, 5, 2, 4, 0, true, true) == 1 + 3 * 7);
  CHECK(theorem_bound(4, 1, 2, 3, 3, false, true) == 3);
  // even r: the flag changes nothing
  CHECK(theorem_bound(4, 2, 2, 3, 2, false, true) == 8);
}

TEST_CASE("sync_pseudo_eulerian on the demo automaton") {
  Automaton A = demo();
  SyncCertificate cert = sync_pseudo_eulerian(A);
  CHECK(cert.word == w(A, "cb"));
  CHECK(cert.word.size() == 2);
  CHECK(cert.bound == 7);
  CHECK(cert.method == SyncMethod::pseudo_eulerian);
  CHECK(apply(A, StateSet::full(4), cert.word).size() == 1);
  REQUIRE(cert.initial.has_value());
  CHECK(cert.initial->first == 1);
  CHECK(cert.initial->second == 1);  // letter b
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].S_before == StateSet::of(4, {0, 2, 3}));
  CHECK(cert.steps[0].word == w(A, "c"));
  CHECK(cert.steps[0].S_after == StateSet::full(4));
  CHECK_FALSE(cert.hypotheses.has_value());

  SyncCertificate verified = sync_pseudo_eulerian(A, {.verify = true});
  REQUIRE(verified.hypotheses.has_value());
  CHECK(verified.hypotheses->p2_given);
  CHECK(verified.hypotheses->all_pass());
}

TEST_CASE("sync_pseudo_eulerian: applicability and synchronizability gates") {
  // the slow family is one-cluster but no positive weighting balances it
  CHECK_THROWS_AS(sync_pseudo_eulerian(cerny_automaton(4)), InapplicableError);

  // two permutation letters: Eulerian, hence applicable, but nothing collapses
  Automaton P = make_automaton(2, {"a", "b"}, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(sync_pseudo_eulerian(P), NoSyncError);
}

TEST_CASE("sync_via_W on the demo cluster words") {
  Automaton A = demo();
  auto ws = verify_uniform_W(A, {w(A, "bb"), w(A, "bbb")});
  REQUIRE(ws.has_value());

  SyncCertificate cert = sync_via_W(A, *ws);
  CHECK(cert.word == w(A, "bbcbb"));
  CHECK(cert.bound == 8);  // (r-1)(n-2+L) + ell + 1 with r=2, L=3, ell=2
  CHECK(cert.method == SyncMethod::w_set);
  CHECK(cert.w0 == w(A, "bb"));
  CHECK_FALSE(cert.initial.has_value());
  CHECK(apply(A, StateSet::full(4), cert.word).size() == 1);
  REQUIRE(cert.steps.size() == 1);
  CHECK(cert.steps[0].S_before == StateSet::singleton(4, 0));
  CHECK(cert.steps[0].S_after == StateSet::of(4, {0, 1}));
  CHECK(cert.steps[0].word == w(A, "cbb"));

  SyncCertificate verified = sync_via_W(A, *ws, {.verify = true});
  REQUIRE(verified.hypotheses.has_value());
  CHECK(verified.hypotheses->p2_given);
  CHECK(verified.hypotheses->all_pass());
}

TEST_CASE("sync_one_cluster picks the candidate with the least bound") {
  Automaton A = demo();
  SyncCertificate cert = sync_one_cluster(A);
  // candidate b has bound 8, candidate c (r = 1) has bound 4: c wins
  CHECK(cert.bound == 4);
  CHECK(cert.word == w(A, "ccc"));
  CHECK(cert.steps.empty());  // the start set already equals the cycle
  CHECK(cert.w0 == w(A, "ccc"));
  CHECK(cert.method == SyncMethod::one_cluster);

  // with the odd-r improvement (r = 1) the bound tightens to 3 and still holds
  SyncCertificate odd = sync_one_cluster(A, {.odd_r_improvement = true});
  CHECK(odd.bound == 3);
  CHECK(odd.word == w(A, "ccc"));

  Automaton I = make_automaton(2, {"a", "b"}, {{0, 0}, {1, 1}});
  CHECK_THROWS_AS(sync_one_cluster(I), InapplicableError);
}

TEST_CASE("sync_one_cluster drives the slow family at its exact reset length") {
  for (std::uint32_t n = 4; n <= 8; ++n) {
    Automaton C = cerny_automaton(n);
    SyncCertificate cert = sync_one_cluster(C);
    CHECK(apply(C, StateSet::full(n), cert.word).size() == 1);
    // the expansion happens to find the optimal schedule here
    CHECK(cert.word.size() == (n - 1) * (n - 1));
    CHECK(cert.bound == 2LL * n * n - 7 * n + 8);
    CHECK(std::cmp_less_equal(cert.word.size(), cert.bound));
  }
  SyncCertificate c4 = sync_one_cluster(cerny_automaton(4));
  CHECK(c4.word == w(cerny_automaton(4), "baaabaaab"));
}

TEST_CASE("verify_hypotheses: pass and fail shapes") {
  Automaton A = demo();
  auto wit = pseudo_eulerian_witness(A);
  REQUIRE(wit.has_value());

  AveragingInstance inst{A, WordDistribution::point_mass(Word{}), StateSet::full(4), Word{}, 1};
  auto P2 = cesaro_average(wit->to_word_distribution(), 4);
  HypothesesReport rep = verify_hypotheses(inst, P2);
  CHECK(rep.p2_given);
  CHECK(rep.p2_support_ok);
  CHECK(rep.fixes_R);
  CHECK(rep.R_reachable);
  CHECK(rep.w0_maps_into_R);
  CHECK(rep.all_pass());

  // without P2 the sufficient one-sided condition is checked on P1
  Automaton C = cerny_automaton(4);
  UniformWSet cw = one_cluster_W(C, 0, StateSet::full(4));
  AveragingInstance inst2{C, WordDistribution::uniform_on(cw.W), cw.R, cw.W.front(), 2};
  HypothesesReport rep2 = verify_hypotheses(inst2, std::nullopt);
  CHECK_FALSE(rep2.p2_given);
  CHECK(rep2.all_pass());

  // a w0 that fails to take Q into R
  AveragingInstance bad{A, WordDistribution::uniform_on({w(A, "bb"), w(A, "bbb")}),
                        StateSet::of(4, {0, 1}), w(A, "a"), 2};
  HypothesesReport rep3 = verify_hypotheses(bad, std::nullopt);
  CHECK_FALSE(rep3.w0_maps_into_R);
  CHECK_FALSE(rep3.all_pass());

  // a P2 with the wrong support shape
  HypothesesReport rep4 = verify_hypotheses(inst, WordDistribution::point_mass(Word{}));
  CHECK_FALSE(rep4.p2_support_ok);
}

TEST_CASE("synchronize_core validates the instance before running") {
  Automaton A = demo();
  // w0 must map Q into R
  AveragingInstance bad{A, WordDistribution::uniform_on({w(A, "bb"), w(A, "bbb")}),
                        StateSet::of(4, {0, 1}), w(A, "a"), 2};
  CHECK_THROWS_AS(synchronize_core(bad), InputError);
}

TEST_CASE("single-state automata synchronize with the empty word") {
  Automaton one = make_automaton(1, {"a"}, {{0}});
  SyncCertificate cert = sync_pseudo_eulerian(one);
  CHECK(cert.word.empty());
  CHECK(apply(one, StateSet::full(1), cert.word).size() == 1);
}

TEST_CASE("expansion_chain_witness certifies the expansion length algebraically") {
  Automaton A = demo();
  StateSet R = StateSet::of(4, {0, 1});
  StateSet S = StateSet::singleton(4, 0);
  std::vector<Word> X{w(A, "bb"), w(A, "bbb")};

  auto found = expansion_chain_witness(A, S, R, X);
  REQUIRE(found.has_value());
  Word full = found->word;
  const Word& x = X[found->seed];
  full.insert(full.end(), x.begin(), x.end());
  CHECK(zscore(A, S, R, full) != S.size());
  CHECK(found->word.size() <= A.n - 1);
}
