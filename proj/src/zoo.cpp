#include "bs12/zoo.hpp"

#include <map>
#include <stdexcept>

namespace bs12 {

namespace {

// Splits s into maximal blocks of equal letters.
std::vector<std::pair<char, std::size_t>> blocks(std::string_view s) {
  std::vector<std::pair<char, std::size_t>> out;
  for (char c : s) {
    if (out.empty() || out.back().first != c) {
      out.emplace_back(c, 1);
    } else {
      ++out.back().second;
    }
  }
  return out;
}

// s = x1^n1 x2^n2 ... with the given letters in order, blocks possibly
// empty; returns the exponents or an empty vector when s has another shape.
std::vector<std::size_t> exponents(std::string_view s, std::string_view letters) {
  std::vector<std::size_t> n(letters.size(), 0);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    while (pos < s.size() && s[pos] == letters[i]) {
      ++n[i];
      ++pos;
    }
  }
  if (pos != s.size()) return {};
  return n;
}

CounterAutomaton z2_anbnan() {
  CounterAutomaton m(2);
  State p = m.add_state("a1"), q = m.add_state("b"), r = m.add_state("a2");
  m.set_start(p);
  m.set_accepting(r);
  m.add_transition(p, 'a', {1, 0}, p);
  m.add_transition(p, std::nullopt, {0, 0}, q);
  m.add_transition(q, 'b', {-1, 1}, q);
  m.add_transition(q, std::nullopt, {0, 0}, r);
  m.add_transition(r, 'a', {0, -1}, r);
  return m;
}

CounterAutomaton z2_ambmanbn() {
  CounterAutomaton m(2);
  State s[4] = {m.add_state("a1"), m.add_state("b1"), m.add_state("a2"), m.add_state("b2")};
  m.set_start(s[0]);
  m.set_accepting(s[3]);
  m.add_transition(s[0], 'a', {1, 0}, s[0]);
  m.add_transition(s[1], 'b', {-1, 0}, s[1]);
  m.add_transition(s[2], 'a', {0, 1}, s[2]);
  m.add_transition(s[3], 'b', {0, -1}, s[3]);
  for (int i = 0; i < 3; ++i) m.add_transition(s[i], std::nullopt, {0, 0}, s[i + 1]);
  return m;
}

// Reads the blocks in order; counter changes per block letter.
CounterAutomaton one_counter_blocks(std::string_view letters, const std::vector<std::int64_t>& deltas) {
  CounterAutomaton m(1);
  std::vector<State> s;
  for (char c : letters) s.push_back(m.add_state(std::string(1, c)));
  m.set_start(s.front());
  m.set_accepting(s.back());
  for (std::size_t i = 0; i < s.size(); ++i) {
    m.add_transition(s[i], letters[i], {deltas[i]}, s[i]);
    if (i + 1 < s.size()) m.add_transition(s[i], std::nullopt, {0}, s[i + 1]);
  }
  return m;
}

Pda pda_anbn() {
  Pda p;
  State s0 = p.add_state("start"), a = p.add_state("push"), b = p.add_state("pop"), f = p.add_state("accept");
  p.set_start(s0);
  p.set_accepting(f);
  p.add_transition(s0, std::nullopt, std::nullopt, "$", a);
  p.add_transition(a, 'a', std::nullopt, "X", a);
  p.add_transition(a, std::nullopt, std::nullopt, std::nullopt, b);
  p.add_transition(b, 'b', "X", std::nullopt, b);
  p.add_transition(b, std::nullopt, "$", std::nullopt, f);
  return p;
}

Pda pda_ambmanbn() {
  Pda p;
  State s0 = p.add_state("start");
  State a1 = p.add_state("push1"), b1 = p.add_state("pop1");
  State a2 = p.add_state("push2"), b2 = p.add_state("pop2"), f = p.add_state("accept");
  p.set_start(s0);
  p.set_accepting(f);
  p.add_transition(s0, std::nullopt, std::nullopt, "$", a1);
  p.add_transition(a1, 'a', std::nullopt, "X", a1);
  p.add_transition(a1, std::nullopt, std::nullopt, std::nullopt, b1);
  p.add_transition(b1, 'b', "X", std::nullopt, b1);
  // Only the bottom marker may remain between the two halves.
  p.add_transition(b1, std::nullopt, "$", "$", a2);
  p.add_transition(a2, 'a', std::nullopt, "X", a2);
  p.add_transition(a2, std::nullopt, std::nullopt, std::nullopt, b2);
  p.add_transition(b2, 'b', "X", std::nullopt, b2);
  p.add_transition(b2, std::nullopt, "$", std::nullopt, f);
  return p;
}

Pda pda_ww_reverse() {
  Pda p;
  State s0 = p.add_state("start"), w = p.add_state("push"), r = p.add_state("pop"), f = p.add_state("accept");
  p.set_start(s0);
  p.set_accepting(f);
  p.add_transition(s0, std::nullopt, std::nullopt, "$", w);
  for (char c : std::string("abc")) {
    std::string sym(1, c);
    p.add_transition(w, c, std::nullopt, sym, w);
    p.add_transition(r, c, sym, std::nullopt, r);
  }
  p.add_transition(w, std::nullopt, std::nullopt, std::nullopt, r);
  p.add_transition(r, std::nullopt, "$", std::nullopt, f);
  return p;
}

std::vector<ZooEntry> build_zoo() {
  std::vector<ZooEntry> z;
  z.push_back({"z2_anbnan", "a^n b^n a^n, Z^2-automaton", "ab", z2_anbnan(), is_anbnan});
  z.push_back({"z2_ambmanbn", "a^m b^m a^n b^n, Z^2-automaton", "ab", z2_ambmanbn(), is_ambmanbn});
  z.push_back({"pda_anbn", "a^n b^n, pushdown", "ab", pda_anbn(), is_anbn});
  z.push_back({"pda_ambmanbn", "a^m b^m a^n b^n, pushdown", "ab", pda_ambmanbn(), is_ambmanbn});
  z.push_back({"pda_ww_reverse", "w w^R over {a,b,c}, pushdown", "abc", pda_ww_reverse(), is_ww_reverse});
  z.push_back({"c1_anbn", "a^n b^n, one counter", "ab", one_counter_blocks("ab", {1, -1}), is_anbn});
  z.push_back({"c1_anbncm", "a^n b^n c^m, one counter", "abc", one_counter_blocks("abc", {1, -1, 0}), is_anbncm});
  z.push_back({"c1_ambncn", "a^m b^n c^n, one counter", "abc", one_counter_blocks("abc", {0, 1, -1}), is_ambncn});
  // Declare the full alphabet even where a letter has no edge.
  for (auto& e : z) {
    std::visit([&](auto& m) {
      for (char c : e.alphabet) m.add_symbol(c);
    }, e.machine);
  }
  return z;
}

}  // namespace

bool is_anbn(std::string_view s) {
  auto n = exponents(s, "ab");
  return !n.empty() && n[0] == n[1];
}

bool is_anbnan(std::string_view s) {
  auto n = exponents(s, "aba");
  return !n.empty() && n[0] == n[1] && n[1] == n[2];
}

bool is_ambmanbn(std::string_view s) {
  auto n = exponents(s, "abab");
  return !n.empty() && n[0] == n[1] && n[2] == n[3];
}

bool is_anbncm(std::string_view s) {
  auto n = exponents(s, "abc");
  return !n.empty() && n[0] == n[1];
}

bool is_ambncn(std::string_view s) {
  auto n = exponents(s, "abc");
  return !n.empty() && n[1] == n[2];
}

bool is_ww_reverse(std::string_view s) {
  if (s.size() % 2 != 0) return false;
  for (std::size_t i = 0; i < s.size() / 2; ++i) {
    if (s[i] != s[s.size() - 1 - i]) return false;
  }
  return true;
}

const std::vector<ZooEntry>& zoo() {
  static const std::vector<ZooEntry> z = build_zoo();
  return z;
}

const ZooEntry& zoo_entry(std::string_view name) {
  for (const auto& e : zoo()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no zoo machine named " + std::string(name));
}

CounterAutomaton finite_acceptor(const std::vector<std::string>& words, std::size_t k) {
  CounterAutomaton m(k);
  State root = m.add_state("root");
  m.set_start(root);
  std::map<std::pair<State, char>, State> child;
  for (const auto& w : words) {
    State s = root;
    for (char c : w) {
      auto [it, inserted] = child.try_emplace({s, c}, 0);
      if (inserted) {
        it->second = m.add_state();
        m.add_transition(s, c, {}, it->second);
      }
      s = it->second;
    }
    m.set_accepting(s);
  }
  return m;
}

}  // namespace bs12
