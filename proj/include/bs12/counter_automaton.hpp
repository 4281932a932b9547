#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bs12 {

using Symbol = char;
using State = std::size_t;

class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CounterTransition {
  State from;
  std::optional<Symbol> symbol;  // nullopt is an epsilon edge
  std::vector<std::int64_t> delta;
  State to;
};

// A Z^k-automaton (blind k-counter automaton). A word is accepted when some
// path from the start state spells it, ends in an accept state, and its
// deltas sum to zero. k = 0 is an ordinary NFA with epsilon edges.
class CounterAutomaton {
 public:
  explicit CounterAutomaton(std::size_t k = 0) : k_(k) {}

  std::size_t k() const { return k_; }
  std::size_t num_states() const { return names_.size(); }

  State add_state(std::string name = {});
  const std::string& state_name(State s) const { return names_.at(s); }
  std::optional<State> find_state(std::string_view name) const;

  State start() const { return start_; }
  void set_start(State s);
  bool is_accepting(State s) const { return accepting_.at(s); }
  void set_accepting(State s, bool accepting = true);
  std::vector<State> accepting_states() const;

  void add_transition(State from, std::optional<Symbol> symbol, std::vector<std::int64_t> delta, State to);
  const std::vector<CounterTransition>& transitions() const { return transitions_; }
  // Indices into transitions() leaving s.
  const std::vector<std::size_t>& out(State s) const { return out_.at(s); }

  // Symbols from transitions plus any added explicitly.
  const std::set<Symbol>& alphabet() const { return alphabet_; }
  void add_symbol(Symbol c) { alphabet_.insert(c); }

  // Appends zero components so that k() == k.
  void pad_counters(std::size_t k);

  std::int64_t max_abs_delta() const;

 private:
  std::size_t k_;
  std::vector<std::string> names_;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<CounterTransition> transitions_;
  std::set<Symbol> alphabet_;
  State start_ = 0;
};

// Explores configurations (state, counters) breadth-first per input position.
// Counter components are confined to |c| <= B with
//   B = (|w| + 1) * |states| * max(1, max |delta|).
// When epsilon edges form no cycle with a nonzero delta, every path stays
// inside this band, so the search is exact; otherwise B caps the search.
// Throws AlphabetError for symbols outside the machine's alphabet.
bool accept_counter(const CounterAutomaton& m, std::string_view input);

// Splits every edge with a component of size > 1 into a chain of edges with
// components in {-1, 0, 1}; only the first edge of a chain reads the symbol.
CounterAutomaton normalize_deltas(const CounterAutomaton& m);

// New start state with epsilon edges to both starts; counters padded to the
// larger k, with m1's counters first.
CounterAutomaton union_of(const CounterAutomaton& m1, const CounterAutomaton& m2);

// Product with an NFA (k = 0); reachable pairs only.
CounterAutomaton intersect_regular(const CounterAutomaton& m, const CounterAutomaton& n);

enum class ConcatOrder { CL, LC };  // CL: L(m)L(n), LC: L(n)L(m)

// Epsilon edges from the accept states of the first factor to the start of
// the second. At most one operand may have k > 0.
CounterAutomaton concat(const CounterAutomaton& m, const CounterAutomaton& n, ConcatOrder order);

}  // namespace bs12
