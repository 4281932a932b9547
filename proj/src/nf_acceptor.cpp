#include "bs12/nf_acceptor.hpp"

#include <functional>
#include <string>

#include "bs12/nf_tables.hpp"
#include "bs12/zoo.hpp"

namespace bs12 {

namespace {

std::string a_power(int i) { return i >= 0 ? std::string(i, 'a') : std::string(-i, 'A'); }

// Allowed counter changes for one letter; `first_run_t` marks the first
// t of a suffix path, which must not count.
using DeltaRule = std::function<std::vector<std::int64_t>(char c, bool first_run_t)>;

class Builder {
 public:
  explicit Builder(DeltaRule rule) : m(1), rule_(std::move(rule)) {}

  State state(const std::string& name) { return m.add_state(name); }

  void edge(State from, char c, State to, bool first_run_t = false) {
    for (auto d : rule_(c, first_run_t)) m.add_transition(from, c, {d}, to);
  }

  // Reads `letters` from `from` to `to` through fresh states.
  void path(State from, const std::string& letters, State to, bool first_is_run_t = false) {
    State cur = from;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      State next = i + 1 == letters.size() ? to : m.add_state();
      edge(cur, letters[i], next, first_is_run_t && i == 0);
      cur = next;
    }
  }

  CounterAutomaton m;

 private:
  DeltaRule rule_;
};

// X (with_lead) and N families: t^k [N-run] t^m. The first three entries come
// from `prefixes`; later entries are 0 or +-1 with no two nonzero in a row.
CounterAutomaton n_family_machine(const std::set<Pattern>& prefixes, bool with_lead) {
  Builder b([](char c, bool) -> std::vector<std::int64_t> {
    if (c == 'T') return {-1, 0};
    if (c == 't') return {1};
    return {0};
  });
  State s = b.state("start");
  b.m.set_start(s);
  State head = s;
  if (with_lead) {
    head = b.state("lead");
    b.edge(s, 't', head);
    b.edge(head, 't', head);
  }
  State zero = b.state("free");      // previous entry 0, next entry unrestricted
  State pos = b.state("plus");       // current entry is +1
  State neg = b.state("minus");      // current entry is -1
  State forced = b.state("forced");  // previous entry nonzero, current must be 0
  State trail = b.state("trail");
  for (const auto& p : prefixes) {
    std::string w = a_power(p[0]) + "T" + a_power(p[1]) + "T" + a_power(p[2]) + "T";
    b.path(head, w, p[2] == 0 ? zero : forced);
  }
  b.edge(zero, 'T', zero);
  b.edge(zero, 'a', pos);
  b.edge(zero, 'A', neg);
  b.edge(pos, 'T', forced);
  b.edge(neg, 'T', forced);
  b.edge(forced, 'T', zero);
  b.edge(pos, 't', trail);
  b.edge(neg, 't', trail);
  b.edge(trail, 't', trail);
  for (State q : {zero, pos, neg, forced, trail}) b.m.set_accepting(q);
  return b.m;
}

// P (no trailing T) and PX (with_trail) families: t^-k [P-run] t^-m. The
// last three entries come from `suffixes`; earlier entries are 0 or +-1 with
// no two nonzero in a row, and the first is nonzero when k > 0. The first t
// of the suffix path never counts, which makes k + m < l strict.
CounterAutomaton p_family_machine(const std::set<Pattern>& suffixes, bool with_trail) {
  Builder b([](char c, bool first_run_t) -> std::vector<std::int64_t> {
    if (c == 't') return first_run_t ? std::vector<std::int64_t>{0} : std::vector<std::int64_t>{-1, 0};
    if (c == 'T') return {1};
    return {0};
  });
  State s = b.state("start");
  b.m.set_start(s);
  State lead = b.state("lead");     // inside t^-k, k > 0
  State zero = b.state("free");     // current entry nothing read, may become nonzero
  State nonzero = b.state("nonzero");
  State forced = b.state("forced");  // current entry must stay 0
  State end = b.state("end");
  b.edge(s, 'T', lead);
  b.edge(lead, 'T', lead);
  for (char c : {'a', 'A'}) {
    b.edge(s, c, nonzero);
    b.edge(zero, c, nonzero);
    b.edge(lead, c, nonzero);
  }
  b.edge(s, 't', zero);
  b.edge(zero, 't', zero);
  b.edge(nonzero, 't', forced);
  b.edge(forced, 't', zero);
  for (const auto& p : suffixes) {
    std::string w = "t" + a_power(p[0]) + "t" + a_power(p[1]) + "t" + a_power(p[2]);
    b.path(s, w, end, true);
    b.path(zero, w, end, true);
    b.path(forced, w, end, true);
    if (p[0] == 0) b.path(nonzero, w, end, true);
  }
  if (with_trail) {
    State trail = b.state("trail");
    b.edge(end, 'T', trail);
    b.edge(trail, 'T', trail);
    b.m.set_accepting(trail);
  } else {
    b.m.set_accepting(end);
  }
  return b.m;
}

}  // namespace

CounterAutomaton build_nf_acceptor() {
  const auto& tables = builtin_nf_tables();
  std::vector<std::string> e_words;
  for (int i = -3; i <= 3; ++i) e_words.push_back(a_power(i));
  CounterAutomaton m = finite_acceptor(e_words);
  for (const auto& name : nf_word_sections()) {
    std::vector<std::string> words;
    for (const auto& w : tables.section(name)) words.push_back(to_symbols(w));
    m = union_of(m, finite_acceptor(words));
  }
  m = union_of(m, n_family_machine(tables.prefix_x, true));
  m = union_of(m, n_family_machine(tables.prefix_n, false));
  m = union_of(m, p_family_machine(tables.suffix_p, false));
  m = union_of(m, p_family_machine(tables.suffix_px, true));
  return m;
}

}  // namespace bs12
