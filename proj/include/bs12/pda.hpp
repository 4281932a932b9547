#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bs12/counter_automaton.hpp"

namespace bs12 {

using StackId = std::size_t;

struct PdaTransition {
  State from;
  std::optional<Symbol> symbol;  // nullopt: reads nothing
  std::optional<StackId> pop;    // nullopt: pops nothing
  std::optional<StackId> push;   // nullopt: pushes nothing
  State to;
};

// Pushdown automaton: a transition pops `pop` (if any), then pushes `push`
// (if any). Acceptance starts with an empty stack and ends in an accept state
// after the whole input; the final stack is not inspected.
class Pda {
 public:
  State add_state(std::string name = {});
  std::size_t num_states() const { return names_.size(); }
  const std::string& state_name(State s) const { return names_.at(s); }
  std::optional<State> find_state(std::string_view name) const;

  State start() const { return start_; }
  void set_start(State s);
  bool is_accepting(State s) const { return accepting_.at(s); }
  void set_accepting(State s, bool accepting = true);
  std::vector<State> accepting_states() const;

  StackId stack_symbol(const std::string& name);  // interns
  const std::string& stack_symbol_name(StackId id) const { return stack_names_.at(id); }
  std::size_t num_stack_symbols() const { return stack_names_.size(); }

  void add_transition(State from, std::optional<Symbol> symbol, std::optional<std::string> pop,
                      std::optional<std::string> push, State to);
  const std::vector<PdaTransition>& transitions() const { return transitions_; }
  const std::vector<std::size_t>& out(State s) const { return out_.at(s); }

  const std::set<Symbol>& alphabet() const { return alphabet_; }
  void add_symbol(Symbol c) { alphabet_.insert(c); }

 private:
  std::vector<std::string> names_;
  std::vector<bool> accepting_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<PdaTransition> transitions_;
  std::vector<std::string> stack_names_;
  std::set<Symbol> alphabet_;
  State start_ = 0;
};

// Breadth-first over configurations (state, stack) per input position, with
// stacks shared as a trie. Stacks higher than
//   H = (|w| + 1) * |states| * max(1, |stack symbols|) + 1
// are not explored; every machine built in this library keeps its stack
// within |w| + 2 symbols, and H only guards against epsilon push cycles.
// Throws AlphabetError for symbols outside the alphabet.
bool accept_pda(const Pda& p, std::string_view input);

// Compiles a one-counter machine into a PDA: states q+ and q- for each q
// (counter >= 0 and <= 0), stack $+ / $- at the bottom and one '1' per unit
// of |counter|, a fresh start pushing $+, and a single accept state reached
// by popping the bottom marker. Deltas are normalized first.
// Throws std::invalid_argument unless m.k() == 1.
Pda counter_to_pda(const CounterAutomaton& m);

}  // namespace bs12
