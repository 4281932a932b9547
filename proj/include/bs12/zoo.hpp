#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "bs12/counter_automaton.hpp"
#include "bs12/machine_io.hpp"

namespace bs12 {

// A named machine with the predicate defining its language. Every n, m ranges
// over the naturals including 0, so each language contains the empty word.
struct ZooEntry {
  std::string name;
  std::string description;
  std::string alphabet;
  Machine machine;
  std::function<bool(std::string_view)> predicate;
};

// z2_anbnan, z2_ambmanbn, pda_anbn, pda_ambmanbn, pda_ww_reverse, c1_anbn,
// c1_anbncm, c1_ambncn.
const std::vector<ZooEntry>& zoo();
const ZooEntry& zoo_entry(std::string_view name);  // throws std::out_of_range

// Language predicates, written directly from the definitions.
bool is_anbn(std::string_view s);
bool is_anbnan(std::string_view s);
bool is_ambmanbn(std::string_view s);
bool is_anbncm(std::string_view s);
bool is_ambncn(std::string_view s);
bool is_ww_reverse(std::string_view s);

// Machine accepting exactly the given words (k = 0), as a trie.
CounterAutomaton finite_acceptor(const std::vector<std::string>& words, std::size_t k = 0);

}  // namespace bs12
