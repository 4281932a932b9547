#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bs12/word.hpp"

namespace bs12 {

using Pattern = std::array<int, 3>;

// Finite data behind the normal-form language: the short-run word sets and
// the three-entry prefix/suffix patterns allowed at the privileged end of a
// run. Word sets are keyed by section name ("L1" ... "L4'").
struct NfTables {
  std::map<std::string, std::set<Word>> words;
  std::set<Pattern> prefix_x;   // first three entries of an X/XN/XNP run
  std::set<Pattern> prefix_n;   // first three entries of an N/NP<= run
  std::set<Pattern> suffix_p;   // last three entries of a P/NP> run
  std::set<Pattern> suffix_px;  // last three entries of a PX/NPX run

  const std::set<Word>& section(std::string_view name) const;

  // Line-oriented text: "[NAME]" headers, '#' comments, blank lines ignored.
  static NfTables parse(std::string_view text);
  std::string to_text() const;
};

inline const std::vector<std::string>& nf_word_sections() {
  static const std::vector<std::string> names{"L1", "L2", "L3", "L4", "L1'", "L2'", "L3'", "L4'"};
  return names;
}

// Tables compiled into the library from data/nf_tables.txt.
const NfTables& builtin_nf_tables();

}  // namespace bs12
