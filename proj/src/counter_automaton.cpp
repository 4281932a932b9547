#include "bs12/counter_automaton.hpp"

#include <algorithm>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace bs12 {

State CounterAutomaton::add_state(std::string name) {
  State s = names_.size();
  names_.push_back(name.empty() ? "q" + std::to_string(s) : std::move(name));
  accepting_.push_back(false);
  out_.emplace_back();
  return s;
}

std::optional<State> CounterAutomaton::find_state(std::string_view name) const {
  for (State s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) return s;
  }
  return std::nullopt;
}

void CounterAutomaton::set_start(State s) {
  if (s >= num_states()) throw std::out_of_range("no such state");
  start_ = s;
}

void CounterAutomaton::set_accepting(State s, bool accepting) { accepting_.at(s) = accepting; }

std::vector<State> CounterAutomaton::accepting_states() const {
  std::vector<State> out;
  for (State s = 0; s < num_states(); ++s) {
    if (accepting_[s]) out.push_back(s);
  }
  return out;
}

void CounterAutomaton::add_transition(State from, std::optional<Symbol> symbol, std::vector<std::int64_t> delta,
                                      State to) {
  if (from >= num_states() || to >= num_states()) throw std::out_of_range("transition to unknown state");
  if (delta.empty()) delta.assign(k_, 0);
  if (delta.size() != k_) {
    throw std::invalid_argument("delta has " + std::to_string(delta.size()) + " components, machine has k = " +
                                std::to_string(k_));
  }
  if (symbol) alphabet_.insert(*symbol);
  out_[from].push_back(transitions_.size());
  transitions_.push_back({from, symbol, std::move(delta), to});
}

void CounterAutomaton::pad_counters(std::size_t k) {
  if (k < k_) throw std::invalid_argument("cannot shrink counter dimension");
  for (auto& t : transitions_) t.delta.resize(k, 0);
  k_ = k;
}

std::int64_t CounterAutomaton::max_abs_delta() const {
  std::int64_t d = 0;
  for (const auto& t : transitions_) {
    for (auto x : t.delta) d = std::max(d, std::abs(x));
  }
  return d;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::int64_t>& v) const { return boost::hash_range(v.begin(), v.end()); }
};

// A configuration is stored as [state, c_1, ..., c_k].
using Config = std::vector<std::int64_t>;
using ConfigSet = std::unordered_set<Config, VecHash>;

}  // namespace

bool accept_counter(const CounterAutomaton& m, std::string_view input) {
  for (char c : input) {
    if (!m.alphabet().count(c)) {
      throw AlphabetError(std::string("symbol '") + c + "' is not in the machine alphabet");
    }
  }
  const std::size_t k = m.k();
  const std::int64_t band = static_cast<std::int64_t>(input.size() + 1) *
                            static_cast<std::int64_t>(std::max<std::size_t>(1, m.num_states())) *
                            std::max<std::int64_t>(1, m.max_abs_delta());
  auto step = [&](const Config& c, const CounterTransition& t, Config& out) {
    out = c;
    out[0] = static_cast<std::int64_t>(t.to);
    for (std::size_t j = 0; j < k; ++j) {
      out[j + 1] += t.delta[j];
      if (std::abs(out[j + 1]) > band) return false;
    }
    return true;
  };
  auto closure = [&](ConfigSet& set) {
    std::vector<Config> work(set.begin(), set.end());
    Config next;
    while (!work.empty()) {
      Config c = std::move(work.back());
      work.pop_back();
      for (std::size_t ti : m.out(static_cast<State>(c[0]))) {
        const auto& t = m.transitions()[ti];
        if (t.symbol) continue;
        if (step(c, t, next) && set.insert(next).second) work.push_back(next);
      }
    }
  };

  if (m.num_states() == 0) return false;
  ConfigSet current;
  Config start(k + 1, 0);
  start[0] = static_cast<std::int64_t>(m.start());
  current.insert(start);
  closure(current);
  Config next;
  for (char c : input) {
    ConfigSet following;
    for (const auto& conf : current) {
      for (std::size_t ti : m.out(static_cast<State>(conf[0]))) {
        const auto& t = m.transitions()[ti];
        if (t.symbol != c) continue;
        if (step(conf, t, next)) following.insert(next);
      }
    }
    if (following.empty()) return false;
    closure(following);
    current = std::move(following);
  }
  for (const auto& conf : current) {
    if (!m.is_accepting(static_cast<State>(conf[0]))) continue;
    if (std::all_of(conf.begin() + 1, conf.end(), [](std::int64_t x) { return x == 0; })) return true;
  }
  return false;
}

CounterAutomaton normalize_deltas(const CounterAutomaton& m) {
  CounterAutomaton out(m.k());
  for (State s = 0; s < m.num_states(); ++s) {
    out.add_state(m.state_name(s));
    out.set_accepting(s, m.is_accepting(s));
  }
  if (m.num_states() > 0) out.set_start(m.start());
  for (char c : m.alphabet()) out.add_symbol(c);
  for (const auto& t : m.transitions()) {
    std::int64_t len = 0;
    for (auto x : t.delta) len = std::max(len, std::abs(x));
    if (len <= 1) {
      out.add_transition(t.from, t.symbol, t.delta, t.to);
      continue;
    }
    State prev = t.from;
    for (std::int64_t step = 0; step < len; ++step) {
      std::vector<std::int64_t> d(m.k(), 0);
      for (std::size_t j = 0; j < m.k(); ++j) {
        if (step < std::abs(t.delta[j])) d[j] = t.delta[j] > 0 ? 1 : -1;
      }
      State next = step + 1 == len ? t.to : out.add_state();
      out.add_transition(prev, step == 0 ? t.symbol : std::nullopt, d, next);
      prev = next;
    }
  }
  return out;
}

namespace {

// Copies the states and edges of src into dst with counters shifted to start
// at component `offset`; returns the index of src's state 0 in dst.
State embed(CounterAutomaton& dst, const CounterAutomaton& src, std::size_t offset, const std::string& prefix) {
  State base = dst.num_states();
  for (State s = 0; s < src.num_states(); ++s) dst.add_state(prefix + src.state_name(s));
  for (const auto& t : src.transitions()) {
    std::vector<std::int64_t> d(dst.k(), 0);
    std::copy(t.delta.begin(), t.delta.end(), d.begin() + static_cast<std::ptrdiff_t>(offset));
    dst.add_transition(base + t.from, t.symbol, std::move(d), base + t.to);
  }
  for (char c : src.alphabet()) dst.add_symbol(c);
  return base;
}

}  // namespace

CounterAutomaton union_of(const CounterAutomaton& m1, const CounterAutomaton& m2) {
  CounterAutomaton out(std::max(m1.k(), m2.k()));
  State s0 = out.add_state("start");
  out.set_start(s0);
  const CounterAutomaton* parts[] = {&m1, &m2};
  const char* prefixes[] = {"1.", "2."};
  for (int i = 0; i < 2; ++i) {
    const auto& m = *parts[i];
    State base = embed(out, m, 0, prefixes[i]);
    for (State a : m.accepting_states()) out.set_accepting(base + a);
    if (m.num_states() > 0) out.add_transition(s0, std::nullopt, {}, base + m.start());
  }
  return out;
}

CounterAutomaton intersect_regular(const CounterAutomaton& m, const CounterAutomaton& n) {
  if (n.k() != 0) throw std::invalid_argument("intersect_regular: second operand must have k = 0");
  CounterAutomaton out(m.k());
  for (char c : m.alphabet()) out.add_symbol(c);
  for (char c : n.alphabet()) out.add_symbol(c);
  if (m.num_states() == 0 || n.num_states() == 0) {
    out.set_start(out.add_state("empty"));
    return out;
  }
  std::vector<State> index(m.num_states() * n.num_states(), SIZE_MAX);
  std::vector<std::pair<State, State>> work;
  auto get = [&](State p, State q) {
    State& slot = index[p * n.num_states() + q];
    if (slot == SIZE_MAX) {
      slot = out.add_state(m.state_name(p) + "|" + n.state_name(q));
      out.set_accepting(slot, m.is_accepting(p) && n.is_accepting(q));
      work.emplace_back(p, q);
    }
    return slot;
  };
  out.set_start(get(m.start(), n.start()));
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    State from = get(p, q);
    for (std::size_t ti : m.out(p)) {
      const auto& t = m.transitions()[ti];
      if (!t.symbol) {
        State to = get(t.to, q);
        out.add_transition(from, std::nullopt, t.delta, to);
        continue;
      }
      for (std::size_t ui : n.out(q)) {
        const auto& u = n.transitions()[ui];
        if (u.symbol == t.symbol) {
          State to = get(t.to, u.to);
          out.add_transition(from, t.symbol, t.delta, to);
        }
      }
    }
    for (std::size_t ui : n.out(q)) {
      const auto& u = n.transitions()[ui];
      if (!u.symbol) {
        State to = get(p, u.to);
        out.add_transition(from, std::nullopt, {}, to);
      }
    }
  }
  return out;
}

CounterAutomaton concat(const CounterAutomaton& m, const CounterAutomaton& n, ConcatOrder order) {
  if (m.k() > 0 && n.k() > 0) throw std::invalid_argument("concat: at most one operand may have counters");
  const CounterAutomaton& first = order == ConcatOrder::CL ? m : n;
  const CounterAutomaton& second = order == ConcatOrder::CL ? n : m;
  CounterAutomaton out(std::max(m.k(), n.k()));
  State b1 = embed(out, first, 0, "1.");
  State b2 = embed(out, second, 0, "2.");
  if (first.num_states() == 0 || second.num_states() == 0) {
    out.set_start(out.add_state("empty"));
    return out;
  }
  out.set_start(b1 + first.start());
  for (State a : first.accepting_states()) out.add_transition(b1 + a, std::nullopt, {}, b2 + second.start());
  for (State a : second.accepting_states()) out.set_accepting(b2 + a);
  return out;
}

}  // namespace bs12
