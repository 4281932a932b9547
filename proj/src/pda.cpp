#include "bs12/pda.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace bs12 {

State Pda::add_state(std::string name) {
  State s = names_.size();
  names_.push_back(name.empty() ? "q" + std::to_string(s) : std::move(name));
  accepting_.push_back(false);
  out_.emplace_back();
  return s;
}

std::optional<State> Pda::find_state(std::string_view name) const {
  for (State s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) return s;
  }
  return std::nullopt;
}

void Pda::set_start(State s) {
  if (s >= num_states()) throw std::out_of_range("no such state");
  start_ = s;
}

void Pda::set_accepting(State s, bool accepting) { accepting_.at(s) = accepting; }

std::vector<State> Pda::accepting_states() const {
  std::vector<State> out;
  for (State s = 0; s < num_states(); ++s) {
    if (accepting_[s]) out.push_back(s);
  }
  return out;
}

StackId Pda::stack_symbol(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty stack symbol name");
  auto it = std::find(stack_names_.begin(), stack_names_.end(), name);
  if (it != stack_names_.end()) return static_cast<StackId>(it - stack_names_.begin());
  stack_names_.push_back(name);
  return stack_names_.size() - 1;
}

void Pda::add_transition(State from, std::optional<Symbol> symbol, std::optional<std::string> pop,
                         std::optional<std::string> push, State to) {
  if (from >= num_states() || to >= num_states()) throw std::out_of_range("transition to unknown state");
  PdaTransition t{from, symbol, std::nullopt, std::nullopt, to};
  if (pop) t.pop = stack_symbol(*pop);
  if (push) t.push = stack_symbol(*push);
  if (symbol) alphabet_.insert(*symbol);
  out_[from].push_back(transitions_.size());
  transitions_.push_back(t);
}

namespace {

// Stacks as nodes of a trie rooted at the empty stack (node 0).
class StackTrie {
 public:
  StackTrie() { nodes_.push_back({0, 0, 0}); }
  std::size_t push(std::size_t node, StackId sym) {
    auto key = std::make_pair(node, sym);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    nodes_.push_back({sym, node, nodes_[node].height + 1});
    index_.emplace(key, nodes_.size() - 1);
    return nodes_.size() - 1;
  }
  StackId top(std::size_t node) const { return nodes_[node].sym; }
  std::size_t parent(std::size_t node) const { return nodes_[node].parent; }
  std::size_t height(std::size_t node) const { return nodes_[node].height; }

 private:
  struct Node {
    StackId sym;
    std::size_t parent;
    std::size_t height;
  };
  std::vector<Node> nodes_;
  std::map<std::pair<std::size_t, StackId>, std::size_t> index_;
};

struct PairHash {
  std::size_t operator()(const std::pair<State, std::size_t>& p) const {
    return std::hash<std::size_t>()(p.first * 1000003u ^ p.second);
  }
};

}  // namespace

bool accept_pda(const Pda& p, std::string_view input) {
  for (char c : input) {
    if (!p.alphabet().count(c)) {
      throw AlphabetError(std::string("symbol '") + c + "' is not in the machine alphabet");
    }
  }
  if (p.num_states() == 0) return false;
  const std::size_t cap = (input.size() + 1) * p.num_states() * std::max<std::size_t>(1, p.num_stack_symbols()) + 1;
  StackTrie stacks;
  using Config = std::pair<State, std::size_t>;
  using ConfigSet = std::unordered_set<Config, PairHash>;

  // Applies t to c; false when the pop does not match or the cap is hit.
  auto apply = [&](const Config& c, const PdaTransition& t, Config& out) {
    std::size_t node = c.second;
    if (t.pop) {
      if (node == 0 || stacks.top(node) != *t.pop) return false;
      node = stacks.parent(node);
    }
    if (t.push) {
      if (stacks.height(node) + 1 > cap) return false;
      node = stacks.push(node, *t.push);
    }
    out = {t.to, node};
    return true;
  };
  auto closure = [&](ConfigSet& set) {
    std::vector<Config> work(set.begin(), set.end());
    Config next;
    while (!work.empty()) {
      Config c = work.back();
      work.pop_back();
      for (std::size_t ti : p.out(c.first)) {
        const auto& t = p.transitions()[ti];
        if (t.symbol) continue;
        if (apply(c, t, next) && set.insert(next).second) work.push_back(next);
      }
    }
  };

  ConfigSet current{{p.start(), 0}};
  closure(current);
  Config next;
  for (char c : input) {
    ConfigSet following;
    for (const auto& conf : current) {
      for (std::size_t ti : p.out(conf.first)) {
        const auto& t = p.transitions()[ti];
        if (t.symbol != c) continue;
        if (apply(conf, t, next)) following.insert(next);
      }
    }
    if (following.empty()) return false;
    closure(following);
    current = std::move(following);
  }
  return std::any_of(current.begin(), current.end(), [&](const Config& c) { return p.is_accepting(c.first); });
}

Pda counter_to_pda(const CounterAutomaton& machine) {
  if (machine.k() != 1) {
    throw std::invalid_argument("counter_to_pda needs a one-counter machine, got k = " +
                                std::to_string(machine.k()));
  }
  CounterAutomaton m = normalize_deltas(machine);
  Pda p;
  const std::string plus = "$+", minus = "$-", one = "1";
  std::size_t n = m.num_states();
  for (State q = 0; q < n; ++q) p.add_state(m.state_name(q) + "+");
  for (State q = 0; q < n; ++q) p.add_state(m.state_name(q) + "-");
  auto pos = [](State q) { return q; };
  auto neg = [n](State q) { return n + q; };
  State s0 = p.add_state("start");
  State acc = p.add_state("accept");
  p.set_start(s0);
  p.set_accepting(acc);
  for (char c : m.alphabet()) p.add_symbol(c);
  p.stack_symbol(plus);
  p.stack_symbol(minus);
  p.stack_symbol(one);
  if (n == 0) return p;

  p.add_transition(s0, std::nullopt, std::nullopt, plus, pos(m.start()));
  for (const auto& t : m.transitions()) {
    std::int64_t d = t.delta[0];
    if (d == 0) {
      p.add_transition(pos(t.from), t.symbol, std::nullopt, std::nullopt, pos(t.to));
      p.add_transition(neg(t.from), t.symbol, std::nullopt, std::nullopt, neg(t.to));
    } else if (d == 1) {
      p.add_transition(pos(t.from), t.symbol, std::nullopt, one, pos(t.to));
      p.add_transition(neg(t.from), t.symbol, one, std::nullopt, neg(t.to));
    } else {
      p.add_transition(pos(t.from), t.symbol, one, std::nullopt, pos(t.to));
      p.add_transition(neg(t.from), t.symbol, std::nullopt, one, neg(t.to));
    }
  }
  // At counter zero the bottom marker is on top and the sign may flip.
  for (State q = 0; q < n; ++q) {
    p.add_transition(pos(q), std::nullopt, plus, minus, neg(q));
    p.add_transition(neg(q), std::nullopt, minus, plus, pos(q));
  }
  for (State q : m.accepting_states()) {
    p.add_transition(pos(q), std::nullopt, plus, std::nullopt, acc);
    p.add_transition(neg(q), std::nullopt, minus, std::nullopt, acc);
  }
  return p;
}

}  // namespace bs12
