#include "synchrokit/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace synchrokit {

namespace {

using nlohmann::json;

std::size_t line_of_offset(const std::string& text, std::size_t byte) {
  auto end = text.begin() + static_cast<std::ptrdiff_t>(std::min(byte, text.size()));
  return 1 + static_cast<std::size_t>(std::count(text.begin(), end, '\n'));
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Automaton automaton_from_json_text(const std::string& text, const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(origin + ":" + std::to_string(line_of_offset(text, e.byte)) +
                     ": malformed JSON: " + e.what());
  }
  if (!j.is_object()) throw InputError(origin + ": top level must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "n" && key != "alphabet" && key != "delta")
      throw InputError(origin + ": unknown key \"" + key + "\"");
  for (const char* key : {"n", "alphabet", "delta"})
    if (!j.contains(key)) throw InputError(origin + ": missing key \"" + std::string(key) + "\"");

  if (!j["n"].is_number_unsigned())
    throw InputError(origin + ": \"n\" must be a non-negative integer");
  const std::uint64_t n = j["n"].get<std::uint64_t>();
  if (n == 0 || n > kMaxStates)
    throw InputError(origin + ": \"n\" must be in [1," + std::to_string(kMaxStates) + "], got " +
                     std::to_string(n));

  if (!j["alphabet"].is_array())
    throw InputError(origin + ": \"alphabet\" must be an array of strings");
  std::vector<std::string> alphabet;
  for (const auto& name : j["alphabet"]) {
    if (!name.is_string())
      throw InputError(origin + ": \"alphabet\" must be an array of strings");
    alphabet.push_back(name.get<std::string>());
  }

  if (!j["delta"].is_array())
    throw InputError(origin + ": \"delta\" must be an array with one row per state");
  std::vector<std::vector<State>> delta;
  for (const auto& row : j["delta"]) {
    if (!row.is_array())
      throw InputError(origin + ": \"delta\" rows must be arrays of state indices");
    std::vector<State> entries;
    for (const auto& entry : row) {
      if (!entry.is_number_unsigned() || entry.get<std::uint64_t>() >= n)
        throw InputError(origin + ": \"delta\" entries must be state indices in [0," +
                         std::to_string(n - 1) + "]");
      entries.push_back(entry.get<State>());
    }
    delta.push_back(std::move(entries));
  }

  try {
    return make_automaton(static_cast<std::uint32_t>(n), std::move(alphabet), std::move(delta));
  } catch (const InputError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

std::string automaton_to_json_text(const Automaton& A) {
  A.validate();
  json j;
  j["n"] = A.n;
  j["alphabet"] = A.alphabet;
  j["delta"] = A.delta;
  return j.dump(2) + "\n";
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return automaton_from_json_text(buf.str(), path);
}

void save_automaton(const Automaton& A, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << automaton_to_json_text(A);
  if (!out) throw InputError("failed writing " + path);
}

std::string to_dot(const Automaton& A) {
  A.validate();
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (State q = 0; q < A.n; ++q) out << "  " << q << ";\n";
  for (State q = 0; q < A.n; ++q) {
    std::vector<std::vector<Letter>> by_target(A.n);
    for (Letter a = 0; a < A.letters(); ++a) by_target[A.delta[q][a]].push_back(a);
    for (State t = 0; t < A.n; ++t) {
      if (by_target[t].empty()) continue;
      out << "  " << q << " -> " << t << " [label=\"";
      for (std::size_t i = 0; i < by_target[t].size(); ++i) {
        if (i) out << ",";
        out << dot_escape(A.alphabet[by_target[t][i]]);
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string format_word(const Automaton& A, const Word& w) {
  check_word(A, w);
  const bool dotted = std::any_of(A.alphabet.begin(), A.alphabet.end(),
                                  [](const std::string& s) { return s.size() > 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (dotted && i) out += '.';
    out += A.alphabet[w[i]];
  }
  return out;
}

Word parse_word(const Automaton& A, const std::string& text) {
  std::map<std::string, Letter> index;
  for (Letter a = 0; a < A.letters(); ++a) index.emplace(A.alphabet[a], a);

  if (text.empty()) return {};
  if (text == "-" && !index.count("-")) return {};

  if (text.find('.') != std::string::npos) {
    Word w;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t dot = text.find('.', pos);
      if (dot == std::string::npos) dot = text.size();
      std::string name = text.substr(pos, dot - pos);
      auto it = index.find(name);
      if (it == index.end())
        throw InputError("cannot parse word \"" + text + "\": unknown letter \"" + name + "\"");
      w.push_back(it->second);
      pos = dot + 1;
    }
    return w;
  }

  if (auto it = index.find(text); it != index.end()) return {it->second};

  Word w;
  for (char ch : text) {
    auto it = index.find(std::string(1, ch));
    if (it == index.end())
      throw InputError("cannot parse word \"" + text + "\": unknown letter \"" +
                       std::string(1, ch) + "\"");
    w.push_back(it->second);
  }
  return w;
}

}  // namespace synchrokit
