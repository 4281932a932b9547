#include "bs12/nf_tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bs12 {

namespace detail {
std::string_view builtin_nf_tables_text();
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::set<Pattern>* pattern_section(NfTables& t, const std::string& name) {
  if (name == "PREFIX_X") return &t.prefix_x;
  if (name == "PREFIX_N") return &t.prefix_n;
  if (name == "SUFFIX_P") return &t.suffix_p;
  if (name == "SUFFIX_PX") return &t.suffix_px;
  return nullptr;
}

}  // namespace

const std::set<Word>& NfTables::section(std::string_view name) const {
  auto it = words.find(std::string(name));
  if (it == words.end()) throw std::out_of_range("no table section " + std::string(name));
  return it->second;
}

NfTables NfTables::parse(std::string_view text) {
  NfTables t;
  for (const auto& name : nf_word_sections()) t.words[name];
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("bad section header on line " + std::to_string(lineno));
      current = line.substr(1, line.size() - 2);
      if (!t.words.count(current) && !pattern_section(t, current)) {
        throw ParseError("unknown section [" + current + "] on line " + std::to_string(lineno));
      }
      continue;
    }
    if (current.empty()) throw ParseError("data before any section on line " + std::to_string(lineno));
    if (auto* patterns = pattern_section(t, current)) {
      std::istringstream fields(line);
      Pattern p{};
      std::string extra;
      if (!(fields >> p[0] >> p[1] >> p[2]) || (fields >> extra)) {
        throw ParseError("pattern needs three integers on line " + std::to_string(lineno));
      }
      patterns->insert(p);
    } else {
      t.words[current].insert(parse_word(line));
    }
  }
  return t;
}

std::string NfTables::to_text() const {
  std::ostringstream out;
  for (const auto& name : nf_word_sections()) {
    out << "[" << name << "]\n";
    std::vector<Word> sorted(words.at(name).begin(), words.at(name).end());
    std::sort(sorted.begin(), sorted.end(), shortlex_less);
    for (const auto& w : sorted) out << to_string(w) << "\n";
    out << "\n";
  }
  const std::pair<const char*, const std::set<Pattern>*> sections[] = {
      {"PREFIX_X", &prefix_x}, {"PREFIX_N", &prefix_n}, {"SUFFIX_P", &suffix_p}, {"SUFFIX_PX", &suffix_px}};
  for (const auto& [name, set] : sections) {
    out << "[" << name << "]\n";
    for (const auto& p : *set) out << p[0] << " " << p[1] << " " << p[2] << "\n";
    out << "\n";
  }
  return out.str();
}

const NfTables& builtin_nf_tables() {
  static const NfTables tables = NfTables::parse(detail::builtin_nf_tables_text());
  return tables;
}

}  // namespace bs12
