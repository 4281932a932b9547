#include "bs12/machine_io.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

namespace bs12 {

namespace {

using nlohmann::json;

// State names as written; duplicates get a "#index" suffix.
template <class M>
std::vector<std::string> unique_names(const M& m) {
  std::vector<std::string> names;
  std::map<std::string, int> seen;
  for (State s = 0; s < m.num_states(); ++s) seen[m.state_name(s)]++;
  for (State s = 0; s < m.num_states(); ++s) {
    const auto& n = m.state_name(s);
    names.push_back(seen[n] > 1 ? n + "#" + std::to_string(s) : n);
  }
  return names;
}

json letter_json(const std::optional<Symbol>& c) { return c ? json(std::string(1, *c)) : json(nullptr); }

std::optional<Symbol> letter_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  auto s = j.get<std::string>();
  if (s.size() != 1) throw std::invalid_argument("letter must be a single character or null, got \"" + s + "\"");
  return s[0];
}

template <class M>
json common_json(const M& m, const std::vector<std::string>& names) {
  json j;
  j["states"] = names;
  j["start"] = m.num_states() ? json(names[m.start()]) : json(nullptr);
  json acc = json::array();
  for (State s : m.accepting_states()) acc.push_back(names[s]);
  j["accepts"] = acc;
  json alpha = json::array();
  for (char c : m.alphabet()) alpha.push_back(std::string(1, c));
  j["alphabet"] = alpha;
  return j;
}

// Adds states, start, accepts and alphabet; returns name -> state.
template <class M>
std::map<std::string, State> read_common(M& m, const json& j) {
  std::map<std::string, State> index;
  for (const auto& s : j.at("states")) {
    auto name = s.get<std::string>();
    if (index.count(name)) throw std::invalid_argument("duplicate state " + name);
    index[name] = m.add_state(name);
  }
  auto lookup = [&](const json& n) {
    auto it = index.find(n.get<std::string>());
    if (it == index.end()) throw std::invalid_argument("unknown state " + n.dump());
    return it->second;
  };
  if (!j.at("states").empty()) m.set_start(lookup(j.at("start")));
  for (const auto& a : j.value("accepts", json::array())) m.set_accepting(lookup(a));
  for (const auto& c : j.value("alphabet", json::array())) {
    auto sym = letter_from(c);
    if (!sym) throw std::invalid_argument("null in alphabet");
    m.add_symbol(*sym);
  }
  return index;
}

State state_of(const std::map<std::string, State>& index, const json& n) {
  auto it = index.find(n.get<std::string>());
  if (it == index.end()) throw std::invalid_argument("unknown state " + n.dump());
  return it->second;
}

}  // namespace

json to_json(const CounterAutomaton& m) {
  auto names = unique_names(m);
  json j = common_json(m, names);
  j["type"] = "counter";
  j["k"] = m.k();
  json ts = json::array();
  for (const auto& t : m.transitions()) {
    ts.push_back({{"from", names[t.from]}, {"letter", letter_json(t.symbol)}, {"delta", t.delta}, {"to", names[t.to]}});
  }
  j["transitions"] = ts;
  return j;
}

json to_json(const Pda& p) {
  auto names = unique_names(p);
  json j = common_json(p, names);
  j["type"] = "pda";
  json stack = json::array();
  for (StackId s = 0; s < p.num_stack_symbols(); ++s) stack.push_back(p.stack_symbol_name(s));
  j["stack_alphabet"] = stack;
  auto sym = [&](const std::optional<StackId>& s) { return s ? json(p.stack_symbol_name(*s)) : json(nullptr); };
  json ts = json::array();
  for (const auto& t : p.transitions()) {
    ts.push_back({{"from", names[t.from]},
                  {"letter", letter_json(t.symbol)},
                  {"pop", sym(t.pop)},
                  {"push", sym(t.push)},
                  {"to", names[t.to]}});
  }
  j["transitions"] = ts;
  return j;
}

json to_json(const Machine& m) {
  return std::visit([](const auto& x) { return to_json(x); }, m);
}

CounterAutomaton counter_from_json(const json& j) {
  CounterAutomaton m(j.at("k").get<std::size_t>());
  auto index = read_common(m, j);
  for (const auto& t : j.at("transitions")) {
    m.add_transition(state_of(index, t.at("from")), letter_from(t.at("letter")),
                     t.value("delta", std::vector<std::int64_t>{}), state_of(index, t.at("to")));
  }
  return m;
}

Pda pda_from_json(const json& j) {
  Pda p;
  auto index = read_common(p, j);
  for (const auto& s : j.value("stack_alphabet", json::array())) p.stack_symbol(s.get<std::string>());
  auto sym = [](const json& t, const char* key) -> std::optional<std::string> {
    if (!t.contains(key) || t.at(key).is_null()) return std::nullopt;
    return t.at(key).get<std::string>();
  };
  for (const auto& t : j.at("transitions")) {
    p.add_transition(state_of(index, t.at("from")), letter_from(t.at("letter")), sym(t, "pop"), sym(t, "push"),
                     state_of(index, t.at("to")));
  }
  return p;
}

Machine machine_from_json(const json& j) {
  std::string type = j.value("type", std::string(j.contains("k") ? "counter" : "pda"));
  if (type == "counter") return counter_from_json(j);
  if (type == "pda") return pda_from_json(j);
  throw std::invalid_argument("unknown machine type " + type);
}

Machine load_machine(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return machine_from_json(json::parse(in));
}

void save_machine(const Machine& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(m).dump(1) << "\n";
}

bool accepts(const Machine& m, std::string_view input) {
  if (auto* c = std::get_if<CounterAutomaton>(&m)) return accept_counter(*c, input);
  return accept_pda(std::get<Pda>(m), input);
}

const std::set<Symbol>& alphabet(const Machine& m) {
  return std::visit([](const auto& x) -> const std::set<Symbol>& { return x.alphabet(); }, m);
}

}  // namespace bs12
