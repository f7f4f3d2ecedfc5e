// synchrokit command-line interface: classify / sync / oracle / gen / bench.
// Exit codes: 0 success, 1 internal error, 2 bad input or usage, 3 method or
// cap inapplicable, 4 no synchronizing word.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "synchrokit/automaton.hpp"
#include "synchrokit/averaging.hpp"
#include "synchrokit/class_detect.hpp"
#include "synchrokit/harness.hpp"
#include "synchrokit/io.hpp"
#include "synchrokit/word_distribution.hpp"

namespace {

using namespace synchrokit;

// Empty words print as "-" so every printed word round-trips through parse_word.
std::string word_out(const Automaton& A, const Word& w) {
  return w.empty() ? "-" : format_word(A, w);
}

std::uint32_t oracle_cap_from_env(std::uint32_t fallback) {
  const char* env = std::getenv("SYNCHROKIT_ORACLE_MAX_STATES");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > kMaxStates)
    throw InputError("SYNCHROKIT_ORACLE_MAX_STATES must be an integer in [1," +
                     std::to_string(kMaxStates) + "], got \"" + std::string(env) + "\"");
  return static_cast<std::uint32_t>(v);
}

std::string file_label(const std::string& path) {
  std::size_t slash = path.find_last_of("/\\");
  std::string base = (slash == std::string::npos) ? path : path.substr(slash + 1);
  std::size_t dot = base.rfind('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base;
}

std::vector<Word> read_word_file(const Automaton& A, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    // strip whitespace and comments; "-" denotes the empty word
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    words.push_back(parse_word(A, line.substr(b, e - b + 1)));
  }
  if (words.empty()) throw InputError(path + " contains no words");
  return words;
}

struct ClassifyArgs {
  std::string file;
  bool as_json = false;
  bool as_dot = false;
};

int run_classify(const ClassifyArgs& args) {
  Automaton A = load_automaton(args.file);
  if (args.as_dot) {
    std::cout << to_dot(A);
    return 0;
  }
  const bool sc = is_strongly_connected(A);
  const bool sync = is_synchronizing(A);
  const bool euler = is_eulerian(A);
  const auto witness = pseudo_eulerian_witness(A);
  const auto clusters = one_cluster_detect(A);

  if (args.as_json) {
    nlohmann::json j;
    j["n"] = A.n;
    j["alphabet"] = A.alphabet;
    j["strongly_connected"] = sc;
    j["synchronizing"] = sync;
    j["eulerian"] = euler;
    if (witness) {
      nlohmann::json w = nlohmann::json::object();
      for (Letter a = 0; a < A.letters(); ++a) w[A.alphabet[a]] = rat_str(witness->p[a]);
      j["pseudo_eulerian"] = w;
    } else {
      j["pseudo_eulerian"] = nullptr;
    }
    j["one_cluster"] = nlohmann::json::array();
    for (const auto& [a, R] : clusters)
      j["one_cluster"].push_back({{"letter", A.alphabet[a]}, {"r", R.size()}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "states: " << A.n << "\n";
  std::cout << "alphabet:";
  for (const auto& name : A.alphabet) std::cout << " " << name;
  std::cout << "\n";
  std::cout << "strongly_connected: " << (sc ? "true" : "false") << "\n";
  std::cout << "synchronizing: " << (sync ? "true" : "false") << "\n";
  std::cout << "eulerian: " << (euler ? "true" : "false") << "\n";
  std::cout << "pseudo_eulerian: " << (witness ? "true" : "false") << "\n";
  if (witness) {
    std::cout << "  witness:";
    for (Letter a = 0; a < A.letters(); ++a)
      std::cout << " " << A.alphabet[a] << "=" << rat_str(witness->p[a]);
    std::cout << "\n";
  }
  std::cout << "one_cluster:";
  if (clusters.empty()) std::cout << " none";
  for (const auto& [a, R] : clusters) std::cout << " " << A.alphabet[a] << "(r=" << R.size() << ")";
  std::cout << "\n";
  return 0;
}

struct SyncArgs {
  std::string file;
  std::string method = "auto";
  std::string w_file;
  std::uint32_t k = 0;
  bool verify = false;
  bool trace = false;
  bool odd_r = false;
};

int run_sync(const SyncArgs& args) {
  Automaton A = load_automaton(args.file);
  SyncOptions opts;
  opts.verify = args.verify;
  opts.odd_r_improvement = args.odd_r;

  auto via_w_file = [&]() {
    if (args.w_file.empty())
      throw InputError("--w-file is required with the w-set method");
    std::vector<Word> W = read_word_file(A, args.w_file);
    auto ws = verify_uniform_W(A, W, args.k);
    if (!ws) throw InapplicableError("word set fails the uniform k-cover property");
    return sync_via_W(A, *ws, opts);
  };

  SyncCertificate cert;
  if (args.method == "pseudo-eulerian") {
    cert = sync_pseudo_eulerian(A, opts);
  } else if (args.method == "one-cluster") {
    cert = sync_one_cluster(A, opts);
  } else if (args.method == "w-set") {
    cert = via_w_file();
  } else if (args.method == "auto") {
    if (pseudo_eulerian_witness(A)) {
      cert = sync_pseudo_eulerian(A, opts);
    } else if (!one_cluster_detect(A).empty()) {
      cert = sync_one_cluster(A, opts);
    } else if (!args.w_file.empty()) {
      cert = via_w_file();
    } else {
      throw InapplicableError(
          "no method applies: not pseudo-Eulerian, no one-cluster letter, and no --w-file given");
    }
  } else {
    throw InputError("unknown method \"" + args.method +
                     "\" (expected auto, pseudo-eulerian, one-cluster, or w-set)");
  }

  std::cout << "method: " << method_name(cert.method) << "\n";
  std::cout << "word: " << word_out(A, cert.word) << "\n";
  std::cout << "length: " << cert.word.size() << "\n";
  std::cout << "bound: " << cert.bound << "\n";
  if (args.trace) {
    if (cert.initial)
      std::cout << "initial: letter " << A.alphabet[cert.initial->second]
                << " collapses into state " << cert.initial->first << "\n";
    if (!cert.w0.empty()) std::cout << "w0: " << word_out(A, cert.w0) << "\n";
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
      const ExpansionStep& st = cert.steps[i];
      std::cout << "step " << (i + 1) << ": " << st.S_before.str() << " --"
                << word_out(A, st.word) << "--> " << st.S_after.str() << " [cap "
                << st.length_cap_used << "]\n";
    }
  }
  if (cert.hypotheses) {
    const HypothesesReport& h = *cert.hypotheses;
    auto pf = [](bool b) { return b ? "pass" : "FAIL"; };
    std::cout << "hypotheses: " << pf(h.all_pass()) << "\n";
    std::cout << "  p2: " << (h.p2_given ? "materialized" : "not materialized") << "\n";
    std::cout << "  p2_support: " << pf(h.p2_support_ok) << "\n";
    std::cout << "  fixes_R: " << pf(h.fixes_R) << "\n";
    std::cout << "  R_reachable: " << pf(h.R_reachable) << "\n";
    std::cout << "  w0_maps_into_R: " << pf(h.w0_maps_into_R) << "\n";
  }
  return 0;
}

struct OracleArgs {
  std::string file;
  std::uint32_t max_n = 20;
  bool max_n_given = false;
};

int run_oracle(const OracleArgs& args) {
  Automaton A = load_automaton(args.file);
  std::uint32_t cap = args.max_n_given ? args.max_n : oracle_cap_from_env(args.max_n);
  auto w = oracle_shortest_sync(A, cap);
  if (!w) {
    std::cout << "none\n";
    return 4;
  }
  std::cout << "word: " << word_out(A, *w) << "\n";
  std::cout << "length: " << w->size() << "\n";
  return 0;
}

struct GenArgs {
  std::string family;
  std::uint32_t n = 0;
  std::uint32_t k = 2;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& args) {
  Automaton A;
  if (args.family == "cerny") {
    A = cerny_automaton(args.n);
  } else if (auto f = family_from_name(args.family)) {
    A = gen_random(*f, args.n, args.k, args.seed);
  } else {
    throw InputError("unknown family \"" + args.family +
                     "\" (expected cerny, strongly-connected, eulerian, or one-cluster)");
  }
  if (args.out.empty())
    std::cout << automaton_to_json_text(A);
  else
    save_automaton(A, args.out);
  return 0;
}

struct BenchArgs {
  std::vector<std::string> families;
  std::vector<std::string> files;
  std::string n_range;
  std::vector<std::string> methods{"pseudo-eulerian", "one-cluster"};
  bool with_oracle = false;
  std::uint32_t k = 2;
  std::uint64_t seed = 1;
  std::string csv_out;
};

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
  auto parse_uint = [&](const std::string& s) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0')
      throw InputError("bad n-range \"" + text + "\" (expected a..b)");
    return static_cast<std::uint32_t>(v);
  };
  std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    std::uint32_t n = parse_uint(text);
    return {n, n};
  }
  return {parse_uint(text.substr(0, dots)), parse_uint(text.substr(dots + 2))};
}

int run_bench(const BenchArgs& args) {
  if (args.families.empty() && args.files.empty())
    throw InputError("bench needs at least one --family or --file");
  if (!args.families.empty() && args.n_range.empty())
    throw InputError("--n-range is required with --family");

  BenchSpec spec;
  spec.families = args.families;
  if (!args.n_range.empty()) {
    auto [lo, hi] = parse_range(args.n_range);
    spec.n_lo = lo;
    spec.n_hi = hi;
  } else {
    spec.n_lo = 1;
    spec.n_hi = 0;  // empty range; files only
  }
  for (const std::string& path : args.files)
    spec.files.emplace_back(file_label(path), load_automaton(path));
  for (const std::string& m : args.methods) {
    if (m == "pseudo-eulerian")
      spec.methods.push_back(SyncMethod::pseudo_eulerian);
    else if (m == "one-cluster")
      spec.methods.push_back(SyncMethod::one_cluster);
    else
      throw InputError("unknown bench method \"" + m +
                       "\" (expected pseudo-eulerian or one-cluster)");
  }
  spec.with_oracle = args.with_oracle;
  spec.k = args.k;
  spec.seed = args.seed;
  spec.oracle_max_n = oracle_cap_from_env(20);

  std::vector<BenchRecord> records = bench_run(spec);

  std::ostringstream csv;
  csv << "family,n,method,word_length,bound,oracle_length,seconds\n";
  for (const BenchRecord& r : records) {
    csv << r.family << "," << r.n << "," << r.method << ",";
    if (r.word_length) csv << *r.word_length;
    csv << ",";
    if (r.bound) csv << *r.bound;
    csv << ",";
    if (r.oracle_length) csv << *r.oracle_length;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
    csv << "," << buf << "\n";
    if (!r.ok())
      std::cerr << "note: " << r.family << " n=" << r.n << " " << r.method << ": " << r.status
                << "\n";
  }
  if (args.csv_out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(args.csv_out);
    if (!out) throw InputError("cannot write " + args.csv_out);
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synchronizing-word construction toolkit"};
  app.require_subcommand(1);

  ClassifyArgs cl;
  CLI::App* classify = app.add_subcommand("classify", "report automaton classes and witnesses");
  classify->add_option("file", cl.file, "automaton JSON file")->required();
  classify->add_flag("--json", cl.as_json, "machine-readable output");
  classify->add_flag("--dot", cl.as_dot, "print Graphviz digraph instead of the report");

  SyncArgs sy;
  CLI::App* sync = app.add_subcommand("sync", "construct a synchronizing word with a certificate");
  sync->add_option("file", sy.file, "automaton JSON file")->required();
  sync->add_option("--method", sy.method, "auto|pseudo-eulerian|one-cluster|w-set")
      ->default_val("auto");
  sync->add_option("--w-file", sy.w_file, "word set file (one word per line, '-' = empty word)");
  sync->add_option("--k", sy.k, "uniformity k for --w-file (0 = auto-detect)");
  sync->add_flag("--verify", sy.verify, "audit the hypotheses (materializes P2 when feasible)");
  sync->add_flag("--trace", sy.trace, "print the expansion steps");
  sync->add_flag("--odd-r-improvement", sy.odd_r, "use the improved bound when r is odd");

  OracleArgs ora;
  CLI::App* oracle = app.add_subcommand("oracle", "shortest synchronizing word by subset BFS");
  oracle->add_option("file", ora.file, "automaton JSON file")->required();
  auto* max_n_opt = oracle->add_option("--max-n", ora.max_n, "state-count cap (default 20)");

  GenArgs gen;
  CLI::App* genc = app.add_subcommand("gen", "generate an automaton file");
  genc->add_option("--family", gen.family, "cerny|strongly-connected|eulerian|one-cluster")
      ->required();
  genc->add_option("--n", gen.n, "number of states")->required()->check(CLI::Range(1, 64));
  genc->add_option("--k", gen.k, "alphabet size (default 2)");
  genc->add_option("--seed", gen.seed, "RNG seed (default 1)");
  genc->add_option("--out", gen.out, "output path (default stdout)");

  BenchArgs be;
  CLI::App* bench = app.add_subcommand("bench", "bound-tightness benchmark, CSV output");
  bench->add_option("--family", be.families, "family name (repeatable)");
  bench->add_option("--file", be.files, "automaton JSON file (repeatable)");
  bench->add_option("--n-range", be.n_range, "state counts, e.g. 4..10");
  bench->add_option("--methods", be.methods, "pseudo-eulerian,one-cluster")
      ->delimiter(',')
      ->default_val(std::vector<std::string>{"pseudo-eulerian", "one-cluster"});
  bench->add_flag("--oracle", be.with_oracle, "also run the exact oracle when n fits the cap");
  bench->add_option("--k", be.k, "alphabet size for random families (default 2)");
  bench->add_option("--seed", be.seed, "RNG seed (default 1)");
  bench->add_option("--csv", be.csv_out, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(cl);
    if (app.got_subcommand(sync)) return run_sync(sy);
    if (app.got_subcommand(oracle)) {
      ora.max_n_given = max_n_opt->count() > 0;
      return run_oracle(ora);
    }
    if (app.got_subcommand(genc)) return run_gen(gen);
    if (app.got_subcommand(bench)) return run_bench(be);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InapplicableError& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return 3;
  } catch (const NoSyncError& e) {
    std::cerr << "no synchronizing word: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
