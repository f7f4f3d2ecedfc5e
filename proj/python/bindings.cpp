// pybind11 surface: the operations the CLI exposes, as Python callables.
// Words cross the boundary as strings in the automaton's letter names, state
// sets as Python sets of ints, exact rationals as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "synchrokit/automaton.hpp"
#include "synchrokit/averaging.hpp"
#include "synchrokit/class_detect.hpp"
#include "synchrokit/harness.hpp"
#include "synchrokit/io.hpp"
#include "synchrokit/linalg.hpp"
#include "synchrokit/word_distribution.hpp"

namespace py = pybind11;
using namespace synchrokit;

namespace {

StateSet set_in(const Automaton& A, const py::iterable& states) {
  StateSet s(A.n);
  for (py::handle h : states) s.insert(h.cast<State>());
  return s;
}

py::set set_out(const StateSet& s) {
  py::set out;
  for (State q : s.elements()) out.add(py::int_(q));
  return out;
}

py::object fraction(const Rat& q) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(rat_str(q));
}

Rat rat_in(const py::handle& h) {
  Rat q(py::str(h).cast<std::string>());
  q.canonicalize();
  return q;
}

std::vector<Word> words_in(const Automaton& A, const py::iterable& words) {
  std::vector<Word> out;
  for (py::handle h : words) out.push_back(parse_word(A, h.cast<std::string>()));
  return out;
}

py::dict cert_out(const Automaton& A, const SyncCertificate& cert) {
  py::dict d;
  d["word"] = format_word(A, cert.word);
  d["length"] = cert.word.size();
  d["bound"] = cert.bound;
  d["method"] = method_name(cert.method);
  d["w0"] = format_word(A, cert.w0);
  d["initial"] = cert.initial
                     ? py::object(py::make_tuple(cert.initial->first, A.alphabet[cert.initial->second]))
                     : py::object(py::none());
  py::list steps;
  for (const ExpansionStep& st : cert.steps) {
    py::dict s;
    s["S_before"] = set_out(st.S_before);
    s["word"] = format_word(A, st.word);
    s["S_after"] = set_out(st.S_after);
    s["cap"] = st.length_cap_used;
    steps.append(s);
  }
  d["steps"] = steps;
  if (cert.hypotheses) {
    py::dict h;
    h["p2_given"] = cert.hypotheses->p2_given;
    h["p2_support_ok"] = cert.hypotheses->p2_support_ok;
    h["fixes_R"] = cert.hypotheses->fixes_R;
    h["R_reachable"] = cert.hypotheses->R_reachable;
    h["w0_maps_into_R"] = cert.hypotheses->w0_maps_into_R;
    h["all_pass"] = cert.hypotheses->all_pass();
    d["hypotheses"] = h;
  } else {
    d["hypotheses"] = py::none();
  }
  return d;
}

py::dict wset_out(const Automaton& A, const UniformWSet& ws) {
  py::dict d;
  py::list words;
  for (const Word& w : ws.W) words.append(format_word(A, w));
  d["words"] = words;
  d["k"] = ws.k;
  d["R"] = set_out(ws.R);
  d["ell"] = ws.ell;
  d["L"] = ws.L;
  return d;
}

SyncOptions opts_in(bool verify, bool odd_r_improvement) {
  SyncOptions o;
  o.verify = verify;
  o.odd_r_improvement = odd_r_improvement;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "synchronizing-word construction toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InapplicableError>(m, "InapplicableError", PyExc_RuntimeError);
  py::register_exception<NoSyncError>(m, "NoSyncError", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Automaton>(m, "Automaton")
      .def(py::init([](std::uint32_t n, std::vector<std::string> alphabet,
                       std::vector<std::vector<State>> delta) {
             return make_automaton(n, std::move(alphabet), std::move(delta));
           }),
           py::arg("n"), py::arg("alphabet"), py::arg("delta"))
      .def_readonly("n", &Automaton::n)
      .def_readonly("alphabet", &Automaton::alphabet)
      .def_readonly("delta", &Automaton::delta)
      .def("to_json", [](const Automaton& A) { return automaton_to_json_text(A); })
      .def("to_dot", [](const Automaton& A) { return to_dot(A); })
      .def("__repr__", [](const Automaton& A) {
        return "<Automaton n=" + std::to_string(A.n) + " letters=" +
               std::to_string(A.letters()) + ">";
      });

  m.def("load", &load_automaton, py::arg("path"));
  m.def("save", &save_automaton, py::arg("automaton"), py::arg("path"));
  m.def("from_json", &automaton_from_json_text, py::arg("text"),
        py::arg("origin") = "<string>");

  m.def(
      "apply_state",
      [](const Automaton& A, State q, const std::string& w) {
        return apply(A, q, parse_word(A, w));
      },
      py::arg("automaton"), py::arg("state"), py::arg("word"));
  m.def(
      "apply",
      [](const Automaton& A, const py::iterable& S, const std::string& w) {
        return set_out(apply(A, set_in(A, S), parse_word(A, w)));
      },
      py::arg("automaton"), py::arg("states"), py::arg("word"));
  m.def(
      "preimage",
      [](const Automaton& A, const py::iterable& S, const std::string& w) {
        return set_out(preimage(A, set_in(A, S), parse_word(A, w)));
      },
      py::arg("automaton"), py::arg("states"), py::arg("word"));

  m.def("is_strongly_connected", &is_strongly_connected, py::arg("automaton"));
  m.def("is_synchronizing", &is_synchronizing, py::arg("automaton"));
  m.def("is_eulerian", &is_eulerian, py::arg("automaton"));

  m.def(
      "pseudo_eulerian_witness",
      [](const Automaton& A) -> py::object {
        auto w = pseudo_eulerian_witness(A);
        if (!w) return py::none();
        py::dict d;
        for (Letter a = 0; a < A.letters(); ++a) d[py::str(A.alphabet[a])] = fraction(w->p[a]);
        return d;
      },
      py::arg("automaton"));

  m.def(
      "one_cluster_letters",
      [](const Automaton& A) {
        py::list out;
        for (const auto& [a, R] : one_cluster_detect(A))
          out.append(py::make_tuple(A.alphabet[a], set_out(R)));
        return out;
      },
      py::arg("automaton"));

  m.def(
      "distribution_matrix",
      [](const Automaton& A, const py::dict& letter_weights) {
        WordDistribution::Map weights;
        for (auto item : letter_weights) {
          std::string name = item.first.cast<std::string>();
          Letter a = 0;
          while (a < A.letters() && A.alphabet[a] != name) ++a;
          if (a == A.letters()) throw InputError("unknown letter \"" + name + "\"");
          weights[Word{a}] = rat_in(item.second);
        }
        RatMatrix M = distribution_matrix(A, WordDistribution::from_weights(std::move(weights)));
        py::list rows;
        for (std::uint32_t i = 0; i < M.rows; ++i) {
          py::list row;
          for (std::uint32_t j = 0; j < M.cols; ++j) row.append(fraction(M.at(i, j)));
          rows.append(row);
        }
        return rows;
      },
      py::arg("automaton"), py::arg("letter_weights"));

  m.def(
      "zscore",
      [](const Automaton& A, const py::iterable& S, const py::iterable& R,
         const std::string& w) { return zscore(A, set_in(A, S), set_in(A, R), parse_word(A, w)); },
      py::arg("automaton"), py::arg("S"), py::arg("R"), py::arg("word"));

  m.def(
      "sync_pseudo_eulerian",
      [](const Automaton& A, bool verify, bool odd_r_improvement) {
        return cert_out(A, sync_pseudo_eulerian(A, opts_in(verify, odd_r_improvement)));
      },
      py::arg("automaton"), py::arg("verify") = false, py::arg("odd_r_improvement") = false);
  m.def(
      "sync_one_cluster",
      [](const Automaton& A, bool verify, bool odd_r_improvement) {
        return cert_out(A, sync_one_cluster(A, opts_in(verify, odd_r_improvement)));
      },
      py::arg("automaton"), py::arg("verify") = false, py::arg("odd_r_improvement") = false);
  m.def(
      "sync_via_w",
      [](const Automaton& A, const py::iterable& words, std::uint32_t k, bool verify,
         bool odd_r_improvement) {
        auto ws = verify_uniform_W(A, words_in(A, words), k);
        if (!ws) throw InapplicableError("word set fails the uniform k-cover property");
        return cert_out(A, sync_via_W(A, *ws, opts_in(verify, odd_r_improvement)));
      },
      py::arg("automaton"), py::arg("words"), py::arg("k") = 0, py::arg("verify") = false,
      py::arg("odd_r_improvement") = false);

  m.def(
      "verify_uniform_w",
      [](const Automaton& A, const py::iterable& words, std::uint32_t k) -> py::object {
        auto ws = verify_uniform_W(A, words_in(A, words), k);
        if (!ws) return py::none();
        return wset_out(A, *ws);
      },
      py::arg("automaton"), py::arg("words"), py::arg("k") = 0);

  m.def(
      "oracle_shortest_sync",
      [](const Automaton& A, std::uint32_t max_n) -> py::object {
        auto w = oracle_shortest_sync(A, max_n);
        if (!w) return py::none();
        return py::str(format_word(A, *w));
      },
      py::arg("automaton"), py::arg("max_n") = 20);

  m.def("cerny_automaton", &cerny_automaton, py::arg("n"));
  m.def(
      "gen_random",
      [](const std::string& family, std::uint32_t n, std::uint32_t k, std::uint64_t seed) {
        auto f = family_from_name(family);
        if (!f)
          throw InputError("unknown family \"" + family +
                           "\" (expected strongly-connected, eulerian, or one-cluster)");
        return gen_random(*f, n, k, seed);
      },
      py::arg("family"), py::arg("n"), py::arg("k") = 2, py::arg("seed") = 1);

  m.def("theorem_bound", &theorem_bound, py::arg("n"), py::arg("r"), py::arg("c"), py::arg("L"),
        py::arg("ell"), py::arg("R_equals_Q"), py::arg("r_odd_improvement") = false);
}
