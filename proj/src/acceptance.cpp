#include "bs12/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "bs12/counter_automaton.hpp"
#include "bs12/experiments.hpp"
#include "bs12/group_element.hpp"
#include "bs12/machine_io.hpp"
#include "bs12/nf_acceptor.hpp"
#include "bs12/normal_form.hpp"
#include "bs12/oracle.hpp"
#include "bs12/pda.hpp"
#include "bs12/strings.hpp"
#include "bs12/zoo.hpp"

namespace bs12 {

namespace {

constexpr std::string_view kGroupAlphabet = "aAtT";

struct Outcome {
  bool passed;
  std::string detail;
};

Outcome relator(const SuiteOptions&) {
  std::vector<std::pair<Word, GroupElement>> words;
  for_each_string(kGroupAlphabet, 4, [&](const std::string& s) {
    Word w = from_symbols(s);
    words.emplace_back(w, eval_word(w));
  });
  const Word lhs = parse_word("tat^-1"), rhs = parse_word("a^2");
  if (eval_word(lhs) != eval_word(rhs)) return {false, "eval(tat^-1) != eval(a^2)"};
  std::size_t checked = 0;
  for (const auto& [u, gu] : words) {
    for (const auto& [v, gv] : words) {
      Word x = u, y = u;
      x.insert(x.end(), lhs.begin(), lhs.end());
      x.insert(x.end(), v.begin(), v.end());
      y.insert(y.end(), rhs.begin(), rhs.end());
      y.insert(y.end(), v.begin(), v.end());
      if (eval_word(x) != eval_word(y)) return {false, "relator fails for u=" + to_string(u) + " v=" + to_string(v)};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " (u, v) pairs"};
}

Outcome nf_trichotomy(const SuiteOptions& o) {
  std::size_t radius = o.radius.value_or(10);
  Ball ball = bfs_ball(radius);
  auto nfs = enumerate_nf(radius);
  std::unordered_map<GroupElement, Word, GroupElementHash> image;
  for (const auto& w : nfs) {
    GroupElement g = eval_word(w);
    auto d = ball.distance(g);
    if (!d) return {false, "normal form " + to_string(w) + " evaluates outside the ball"};
    if (*d != w.size()) {
      return {false, "normal form " + to_string(w) + " has length " + std::to_string(w.size()) + " but distance " +
                         std::to_string(*d)};
    }
    auto [it, fresh] = image.emplace(g, w);
    if (!fresh) return {false, "normal forms " + to_string(it->second) + " and " + to_string(w) + " coincide"};
  }
  if (image.size() != ball.size()) {
    return {false, std::to_string(ball.size() - image.size()) + " ball elements have no normal form"};
  }
  return {true, "radius " + std::to_string(radius) + ": " + std::to_string(nfs.size()) +
                    " normal forms, bijective and geodesic"};
}

Outcome nf_acceptor(const SuiteOptions&) {
  CounterAutomaton m = build_nf_acceptor();
  std::size_t checked = 0, accepted = 0;
  std::string mismatch;
  for_each_string(kGroupAlphabet, 8, [&](const std::string& s) {
    if (!mismatch.empty()) return;
    bool a = accept_counter(m, s);
    if (a != is_normal_form(from_symbols(s))) mismatch = s;
    accepted += a;
    ++checked;
  });
  if (!mismatch.empty()) return {false, "disagreement on " + to_string(from_symbols(mismatch))};
  return {true, std::to_string(checked) + " words, " + std::to_string(accepted) + " accepted, " +
                    std::to_string(m.num_states()) + " states"};
}

Outcome counter_to_pda_suite(const SuiteOptions&) {
  std::size_t checked = 0;
  const auto& anbn = std::get<CounterAutomaton>(zoo_entry("c1_anbn").machine);
  Pda p = counter_to_pda(anbn);
  std::string bad;
  for_each_string("ab", 10, [&](const std::string& s) {
    if (bad.empty() && accept_pda(p, s) != accept_counter(anbn, s)) bad = "a^n b^n on \"" + s + "\"";
    ++checked;
  });
  if (!bad.empty()) return {false, bad};
  CounterAutomaton nf = build_nf_acceptor();
  Pda q = counter_to_pda(nf);
  for_each_string(kGroupAlphabet, 8, [&](const std::string& s) {
    if (bad.empty() && accept_pda(q, s) != accept_counter(nf, s)) bad = "normal-form acceptor on " + s;
    ++checked;
  });
  if (!bad.empty()) return {false, bad};
  return {true, std::to_string(checked) + " words"};
}

Outcome zoo_suite(const SuiteOptions&) {
  std::size_t checked = 0;
  for (const auto& e : zoo()) {
    std::string bad;
    for_each_string(e.alphabet, 12, [&](const std::string& s) {
      if (bad.empty() && accepts(e.machine, s) != e.predicate(s)) bad = s;
      ++checked;
    });
    if (!bad.empty()) return {false, e.name + " disagrees with its predicate on \"" + bad + "\""};
  }
  return {true, std::to_string(zoo().size()) + " machines, " + std::to_string(checked) + " words"};
}

CounterAutomaton random_machine(std::mt19937_64& rng, std::size_t k) {
  std::uniform_int_distribution<int> n_states(1, 4), n_edges(0, 3), pick(0, 99), delta(-1, 1);
  CounterAutomaton m(k);
  int n = n_states(rng);
  for (int i = 0; i < n; ++i) m.add_state();
  std::uniform_int_distribution<int> state(0, n - 1);
  m.set_start(0);
  for (int i = 0; i < n; ++i) {
    if (pick(rng) < 40) m.set_accepting(static_cast<State>(i));
    int edges = n_edges(rng) + 1;
    for (int e = 0; e < edges; ++e) {
      int r = pick(rng);
      std::optional<Symbol> sym;
      if (r < 45) sym = 'a';
      else if (r < 90) sym = 'b';
      std::vector<std::int64_t> d(k);
      for (auto& x : d) x = delta(rng);
      m.add_transition(static_cast<State>(i), sym, d, static_cast<State>(state(rng)));
    }
  }
  m.add_symbol('a');
  m.add_symbol('b');
  return m;
}

Outcome closure_suite(const SuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  const int trials = 120;
  std::vector<std::string> words;
  for_each_string("ab", 6, [&](const std::string& s) { words.push_back(s); });
  std::size_t checks = 0;
  for (int trial = 0; trial < trials; ++trial) {
    CounterAutomaton m1 = random_machine(rng, 1), m2 = random_machine(rng, 1), reg = random_machine(rng, 0);
    std::map<std::string, bool> in1, in2, inr;
    for (const auto& w : words) {
      in1[w] = accept_counter(m1, w);
      in2[w] = accept_counter(m2, w);
      inr[w] = accept_counter(reg, w);
    }
    auto split_member = [&](const std::map<std::string, bool>& first, const std::map<std::string, bool>& second,
                            const std::string& w) {
      for (std::size_t i = 0; i <= w.size(); ++i) {
        if (first.at(w.substr(0, i)) && second.at(w.substr(i))) return true;
      }
      return false;
    };
    CounterAutomaton u = union_of(m1, m2);
    CounterAutomaton x = intersect_regular(m1, reg);
    CounterAutomaton cl = concat(m1, reg, ConcatOrder::CL);
    CounterAutomaton lc = concat(m1, reg, ConcatOrder::LC);
    for (const auto& w : words) {
      std::string where = "trial " + std::to_string(trial) + " word \"" + w + "\"";
      if (accept_counter(u, w) != (in1[w] || in2[w])) return {false, "union, " + where};
      if (accept_counter(x, w) != (in1[w] && inr[w])) return {false, "intersection, " + where};
      if (accept_counter(cl, w) != split_member(in1, inr, w)) return {false, "concat CL, " + where};
      if (accept_counter(lc, w) != split_member(inr, in1, w)) return {false, "concat LC, " + where};
      checks += 4;
    }
  }
  return {true, std::to_string(trials) + " random triples, " + std::to_string(checks) + " membership checks"};
}

Outcome thue_morse_suite(const SuiteOptions&) {
  const char* expected[] = {"a", "abc", "abcacb", "abcacbabcbac"};
  for (unsigned i = 0; i < 4; ++i) {
    if (thue_morse(i) != expected[i]) return {false, "f^" + std::to_string(i) + "(a) = " + thue_morse(i)};
  }
  for (unsigned i = 0; i <= 10; ++i) {
    if (has_square(thue_morse(i))) return {false, "f^" + std::to_string(i) + "(a) has a square"};
  }
  return {true, "f^1..f^3 match, f^0..f^10 square-free"};
}

Outcome t_encoding_suite(const SuiteOptions&) {
  Word w = parse_word("at^2a^2ta^3t^4at^-9at^2at^-1");
  TEncoding expected{0, 2, 0, 1, 0, 0, 4, -9, 2, -1};
  TEncoding got = t_encode(w);
  if (got != expected) {
    std::string s;
    for (auto x : got) s += std::to_string(x) + " ";
    return {false, "got " + s};
  }
  if (t_decode(got) != w) return {false, "decode does not round-trip"};
  return {true, "0 2 0 1 0 0 4 -9 2 -1"};
}

Outcome mesa_swap_suite(const SuiteOptions&) {
  std::string detail;
  bool ok = true;
  for (auto [i, s] : {std::pair<unsigned, std::int64_t>{2, 4}, {3, 10}}) {
    SwapReport r = swap_experiment(i, s, 3);
    std::ostringstream line;
    line << "(i=" << i << ", s=" << s << ") |w|=" << r.word_length << " |nf|=" << r.normal_form_length << " "
         << (r.variants_differing - r.variants_geodesic.size()) << "/" << r.variants_differing
         << " differing variants shorten";
    if (!r.geodesic_base || r.variants_geodesic.size() > 0 || r.variants_differing == 0) ok = false;
    if (!detail.empty()) detail += "; ";
    detail += line.str();
  }
  return {ok, detail};
}

Outcome growth_suite(const SuiteOptions& o) {
  std::size_t radius = o.radius.value_or(10);
  auto spheres = sphere_sizes(radius);
  std::vector<std::size_t> counts(radius + 1, 0);
  for (const auto& w : enumerate_nf(radius)) ++counts[w.size()];
  if (spheres.size() < 3 && radius >= 2) return {false, "ball too small"};
  const std::size_t anchors[] = {1, 4, 12};
  for (std::size_t n = 0; n < 3 && n <= radius; ++n) {
    if (spheres[n] != anchors[n]) return {false, "sphere " + std::to_string(n) + " has " + std::to_string(spheres[n])};
  }
  std::string list;
  for (std::size_t n = 0; n <= radius; ++n) {
    if (spheres[n] != counts[n]) {
      return {false, "length " + std::to_string(n) + ": sphere " + std::to_string(spheres[n]) + " vs " +
                         std::to_string(counts[n]) + " normal forms"};
    }
    list += (n ? " " : "") + std::to_string(spheres[n]);
  }
  return {true, list};
}

struct Suite {
  int id;
  const char* name;
  Outcome (*run)(const SuiteOptions&);
};

const Suite kSuites[] = {
    {1, "relator", relator},
    {2, "nf-trichotomy", nf_trichotomy},
    {3, "nf-acceptor", nf_acceptor},
    {4, "counter-to-pda", counter_to_pda_suite},
    {5, "zoo", zoo_suite},
    {6, "closure", closure_suite},
    {7, "thue-morse", thue_morse_suite},
    {8, "t-encoding", t_encoding_suite},
    {9, "mesa-swap", mesa_swap_suite},
    {10, "growth", growth_suite},
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.push_back(s.name);
    return v;
  }();
  return names;
}

CriterionResult run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& s : kSuites) {
    if (name != s.name) continue;
    CriterionResult r;
    r.id = s.id;
    r.name = s.name;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = s.run(options);
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::invalid_argument("unknown suite " + std::string(name));
}

std::string format_result(const CriterionResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %2d %-15s (%.1f s)  ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return buf + r.detail;
}

}  // namespace bs12
