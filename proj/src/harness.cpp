#include "synchrokit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <limits>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "synchrokit/class_detect.hpp"

namespace synchrokit {

std::optional<Word> oracle_shortest_sync(const Automaton& A, std::uint32_t max_n) {
  A.validate();
  if (A.n > max_n)
    throw InapplicableError("oracle refuses n > " + std::to_string(max_n) +
                            " (state count " + std::to_string(A.n) + ")");
  if (A.n == 1) return Word{};

  // images of every singleton under every letter, as bitmasks
  std::vector<std::vector<std::uint64_t>> step(A.letters(),
                                               std::vector<std::uint64_t>(A.n));
  for (Letter a = 0; a < A.letters(); ++a)
    for (State q = 0; q < A.n; ++q) step[a][q] = std::uint64_t{1} << A.delta[q][a];

  auto image = [&](std::uint64_t set, Letter a) {
    std::uint64_t out = 0;
    for (std::uint64_t b = set; b; b &= b - 1)
      out |= step[a][static_cast<std::size_t>(__builtin_ctzll(b))];
    return out;
  };

  const std::uint64_t start = StateSet::full(A.n).bits();
  // BFS dequeues subsets in lex order of their (shortlex-least) discovery
  // word, and letters are scanned in increasing order, so the first singleton
  // generated is reached by the lexicographically least shortest word.
  std::unordered_map<std::uint64_t, std::pair<std::uint64_t, Letter>> parent;
  std::unordered_set<std::uint64_t> seen{start};
  std::deque<std::uint64_t> queue{start};

  auto rebuild = [&](std::uint64_t last, Letter final_letter) {
    Word w{final_letter};
    for (std::uint64_t at = last; at != start;) {
      auto [prev, a] = parent.at(at);
      w.push_back(a);
      at = prev;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  while (!queue.empty()) {
    std::uint64_t cur = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < A.letters(); ++a) {
      std::uint64_t next = image(cur, a);
      if ((next & (next - 1)) == 0) return rebuild(cur, a);  // singleton hit
      if (seen.insert(next).second) {
        parent.emplace(next, std::make_pair(cur, a));
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

Automaton cerny_automaton(std::uint32_t n) {
  if (n < 2) throw InputError("cerny_automaton needs n >= 2");
  std::vector<std::vector<State>> delta(n, std::vector<State>(2));
  for (State q = 0; q < n; ++q) {
    delta[q][0] = (q + 1) % n;
    delta[q][1] = (q == 0) ? 1 : q;
  }
  return make_automaton(n, {"a", "b"}, std::move(delta));
}

std::string family_name(Family f) {
  switch (f) {
    case Family::strongly_connected: return "strongly-connected";
    case Family::eulerian: return "eulerian";
    case Family::one_cluster: return "one-cluster";
  }
  throw InternalError("unknown family tag");
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "strongly-connected") return Family::strongly_connected;
  if (name == "eulerian") return Family::eulerian;
  if (name == "one-cluster") return Family::one_cluster;
  return std::nullopt;
}

std::vector<std::string> default_alphabet(std::uint32_t k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (i < 26)
      names.emplace_back(1, static_cast<char>('a' + i));
    else
      names.push_back("a" + std::to_string(i));
  }
  return names;
}

namespace {

constexpr int kRetryCap = 10000;

// std::uniform_int_distribution is implementation-defined; this keeps
// generated automata identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % m;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % m;
  }
}

std::vector<State> random_permutation(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<State> p(n);
  for (State q = 0; q < n; ++q) p[q] = q;
  for (std::uint32_t i = n; i > 1; --i)
    std::swap(p[i - 1], p[uniform_below(rng, i)]);
  return p;
}

std::vector<std::vector<State>> random_delta(std::mt19937_64& rng, std::uint32_t n,
                                             std::uint32_t k) {
  std::vector<std::vector<State>> delta(n, std::vector<State>(k));
  for (State q = 0; q < n; ++q)
    for (Letter a = 0; a < k; ++a) delta[q][a] = static_cast<State>(uniform_below(rng, n));
  return delta;
}

// Exactly one cycle in the functional graph?
bool single_cycle(const std::vector<State>& f) {
  const std::uint32_t n = static_cast<std::uint32_t>(f.size());
  std::uint64_t cyclic = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (;;) {
    std::uint64_t next = 0;
    for (std::uint64_t b = cyclic; b; b &= b - 1)
      next |= std::uint64_t{1} << f[static_cast<std::size_t>(__builtin_ctzll(b))];
    if (next == cyclic) break;
    cyclic = next;
  }
  State q0 = static_cast<State>(__builtin_ctzll(cyclic));
  std::uint64_t walked = 0;
  for (State q = q0; !(walked >> q & 1); q = f[q]) walked |= std::uint64_t{1} << q;
  return walked == cyclic;
}

// Superpose k random permutations into a balanced k-in-k-out multigraph and
// read letters off an Eulerian circuit. (Keeping the permutations themselves
// as letters would never synchronize for n > 1, so letters must be
// reassigned; the circuit is the canonical way to do that while preserving
// in-degrees.)
std::optional<Automaton> try_eulerian(std::mt19937_64& rng, std::uint32_t n, std::uint32_t k) {
  std::vector<std::vector<State>> adj(n);
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<State> p = random_permutation(rng, n);
    for (State q = 0; q < n; ++q) adj[q].push_back(p[q]);
  }
  // weak connectivity (with balanced degrees this implies an Eulerian circuit)
  std::vector<std::vector<State>> undirected(n);
  for (State q = 0; q < n; ++q)
    for (State t : adj[q]) {
      undirected[q].push_back(t);
      undirected[t].push_back(q);
    }
  StateSet reached = StateSet::singleton(n, 0);
  std::vector<State> stack{0};
  while (!stack.empty()) {
    State v = stack.back();
    stack.pop_back();
    for (State t : undirected[v])
      if (!reached.contains(t)) {
        reached.insert(t);
        stack.push_back(t);
      }
  }
  if (!reached.is_full()) return std::nullopt;

  // Hierholzer: iterative edge-exhausting walk from 0
  std::vector<std::size_t> ptr(n, 0);
  std::vector<State> walk{0}, circuit;
  while (!walk.empty()) {
    State v = walk.back();
    if (ptr[v] < adj[v].size()) {
      walk.push_back(adj[v][ptr[v]++]);
    } else {
      circuit.push_back(v);
      walk.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != std::size_t{n} * k + 1) return std::nullopt;  // unreachable when connected

  // letter j of a state = its (j+1)-th departure along the circuit
  std::vector<std::vector<State>> delta(n, std::vector<State>(k));
  std::vector<std::uint32_t> used(n, 0);
  for (std::size_t i = 0; i + 1 < circuit.size(); ++i) {
    State v = circuit[i];
    delta[v][used[v]++] = circuit[i + 1];
  }
  return make_automaton(n, default_alphabet(k), std::move(delta));
}

}  // namespace

Automaton gen_random(Family f, std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
  if (n == 0) throw InputError("n must be positive");
  if (k == 0) throw InputError("alphabet size must be positive");
  if (n > kMaxStates)
    throw InputError("n must be at most " + std::to_string(kMaxStates));
  std::mt19937_64 rng(seed);

  for (int attempt = 0; attempt < kRetryCap; ++attempt) {
    switch (f) {
      case Family::strongly_connected: {
        Automaton A = make_automaton(n, default_alphabet(k), random_delta(rng, n, k));
        if (is_strongly_connected(A)) return A;
        break;
      }
      case Family::eulerian: {
        if (auto A = try_eulerian(rng, n, k)) {
          if (!is_eulerian(*A)) throw InternalError("generated automaton fails the Eulerian check");
          return *A;
        }
        break;
      }
      case Family::one_cluster: {
        auto delta = random_delta(rng, n, k);
        std::vector<State> f0(n);
        for (State q = 0; q < n; ++q) f0[q] = delta[q][0];
        if (!single_cycle(f0)) break;
        Automaton A = make_automaton(n, default_alphabet(k), std::move(delta));
        if (one_cluster_detect(A).empty())
          throw InternalError("single-cycle letter not detected as one-cluster");
        return A;
      }
    }
  }
  throw InapplicableError("could not generate a " + family_name(f) + " automaton with n=" +
                          std::to_string(n) + ", k=" + std::to_string(k) + " after " +
                          std::to_string(kRetryCap) + " attempts");
}

std::vector<BenchRecord> bench_run(const BenchSpec& spec) {
  for (SyncMethod m : spec.methods)
    if (m != SyncMethod::pseudo_eulerian && m != SyncMethod::one_cluster)
      throw InputError("bench supports the pseudo-eulerian and one-cluster methods");

  struct Item {
    std::string label;
    std::optional<Automaton> A;
    std::string error;
  };
  std::vector<Item> items;
  for (const std::string& fam : spec.families) {
    for (std::uint32_t n = spec.n_lo; n <= spec.n_hi; ++n) {
      Item item{fam, std::nullopt, ""};
      try {
        if (fam == "cerny") {
          item.A = cerny_automaton(n);
        } else if (auto f = family_from_name(fam)) {
          item.A = gen_random(*f, n, spec.k, spec.seed);
        } else {
          throw InputError("unknown family: " + fam);
        }
      } catch (const InputError& e) {
        item.error = e.what();
      } catch (const InapplicableError& e) {
        item.error = e.what();
      }
      items.push_back(std::move(item));
    }
  }
  for (const auto& [label, A] : spec.files) items.push_back({label, A, ""});

  std::vector<BenchRecord> out;
  for (const Item& item : items) {
    std::optional<std::size_t> oracle_len;
    if (item.A && spec.with_oracle && item.A->n <= spec.oracle_max_n)
      if (auto w = oracle_shortest_sync(*item.A, spec.oracle_max_n)) oracle_len = w->size();

    for (SyncMethod m : spec.methods) {
      BenchRecord rec;
      rec.family = item.label;
      rec.n = item.A ? item.A->n : 0;
      rec.method = method_name(m);
      rec.oracle_length = oracle_len;
      if (!item.A) {
        rec.status = "skipped: " + item.error;
        out.push_back(std::move(rec));
        continue;
      }
      auto t0 = std::chrono::steady_clock::now();
      try {
        SyncCertificate cert = (m == SyncMethod::pseudo_eulerian)
                                   ? sync_pseudo_eulerian(*item.A)
                                   : sync_one_cluster(*item.A);
        rec.word_length = cert.word.size();
        rec.bound = cert.bound;
        rec.status = "ok";
      } catch (const InapplicableError& e) {
        rec.status = std::string("skipped: ") + e.what();
      } catch (const NoSyncError& e) {
        rec.status = std::string("skipped: ") + e.what();
      }
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      out.push_back(std::move(rec));
    }
  }
  return out;
}

}  // namespace synchrokit
