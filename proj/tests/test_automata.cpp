#include <doctest.h>

#include <random>

#include "bs12/counter_automaton.hpp"
#include "bs12/experiments.hpp"
#include "bs12/nf_acceptor.hpp"
#include "bs12/normal_form.hpp"
#include "bs12/pda.hpp"
#include "bs12/strings.hpp"
#include "bs12/zoo.hpp"
#include "automata_oracle.hpp"

using namespace bs12;

namespace {
const CounterAutomaton& counter(std::string_view name) { return std::get<CounterAutomaton>(zoo_entry(name).machine); }
const Pda& pda(std::string_view name) { return std::get<Pda>(zoo_entry(name).machine); }
}  // namespace

TEST_CASE("accept_counter examples") {
  const auto& m = counter("z2_anbnan");
  CHECK(accept_counter(m, "aabbaa"));
  CHECK_FALSE(accept_counter(m, "aab"));
  CHECK(accept_counter(m, ""));
  CHECK(accept_counter(m, "aaabbbaaa"));
  CHECK_FALSE(accept_counter(m, "aabbaaa"));
  CHECK_THROWS_AS(accept_counter(m, "abc"), AlphabetError);
}

TEST_CASE("accept_pda examples") {
  CHECK(accept_pda(pda("pda_anbn"), "aabb"));
  CHECK_FALSE(accept_pda(pda("pda_anbn"), "abab"));
  CHECK(accept_pda(pda("pda_ww_reverse"), "abba"));
  CHECK_FALSE(accept_pda(pda("pda_ww_reverse"), "abab"));
  CHECK_THROWS_AS(accept_pda(pda("pda_anbn"), "ac"), AlphabetError);
}

TEST_CASE("zoo examples") {
  CHECK(accept_counter(counter("z2_ambmanbn"), "abab"));
  CHECK(accept_counter(counter("c1_anbncm"), "aabbccc"));
  CHECK_FALSE(accept_counter(counter("z2_anbnan"), "aabba"));
  CHECK_THROWS_AS(zoo_entry("nope"), std::out_of_range);
}

TEST_CASE("zoo machines agree with their predicates (length <= 10)") {
  for (const auto& e : zoo()) {
    CAPTURE(e.name);
    for_each_string(e.alphabet, 10, [&](const std::string& w) {
      CAPTURE(w);
      REQUIRE(accepts(e.machine, w) == e.predicate(w));
    });
  }
}

TEST_CASE("accept_counter matches a path-enumeration oracle on random epsilon-acyclic machines") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    auto m = automata_oracle::random_machine(rng, 4, 1 + trial % 2, true);
    for_each_string("ab", 6, [&](const std::string& w) {
      REQUIRE(accept_counter(m, w) == automata_oracle::path_accepts(m, w));
    });
  }
}

TEST_CASE("epsilon cycles with counter effects") {
  // s --eps,+1--> s, s --a,0--> f, f --eps,-1--> f: accepts exactly "a".
  CounterAutomaton m(1);
  State s = m.add_state("s"), f = m.add_state("f");
  m.set_start(s);
  m.set_accepting(f);
  m.add_transition(s, std::nullopt, {1}, s);
  m.add_transition(s, 'a', {0}, f);
  m.add_transition(f, std::nullopt, {-1}, f);
  m.add_symbol('b');
  CHECK(accept_counter(m, "a"));
  CHECK_FALSE(accept_counter(m, ""));
  CHECK_FALSE(accept_counter(m, "ab"));

  // Only an epsilon loop of +2 and a letter of -1: never balanced on "a",
  // balanced on "aa".
  CounterAutomaton n(1);
  State p = n.add_state("p");
  n.set_start(p);
  n.set_accepting(p);
  n.add_transition(p, std::nullopt, {2}, p);
  n.add_transition(p, 'a', {-1}, p);
  CHECK(accept_counter(n, ""));
  CHECK_FALSE(accept_counter(n, "a"));
  CHECK(accept_counter(n, "aa"));
  CHECK(accept_counter(n, "aaaa"));
  CHECK_FALSE(accept_counter(n, "aaa"));
}

TEST_CASE("normalize_deltas") {
  CounterAutomaton m(1);
  State s = m.add_state("s"), f = m.add_state("f");
  m.set_start(s);
  m.set_accepting(f);
  m.add_transition(s, 'a', {3}, f);
  m.add_transition(f, 'b', {-1}, f);
  auto n = normalize_deltas(m);
  CHECK(n.max_abs_delta() == 1);
  CHECK(n.transitions().size() == 4);
  CHECK(n.num_states() == 4);
  std::size_t reading = 0;
  for (const auto& t : n.transitions()) {
    CHECK(std::abs(t.delta[0]) == 1);
    reading += t.symbol.has_value();
  }
  CHECK(reading == 2);
  CHECK(accept_counter(n, "abbb"));
  CHECK_FALSE(accept_counter(n, "abb"));

  // Already normalized: same shape.
  const auto& z = counter("z2_anbnan");
  auto zn = normalize_deltas(z);
  CHECK(zn.num_states() == z.num_states());
  CHECK(zn.transitions().size() == z.transitions().size());

  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto r = automata_oracle::random_machine(rng, 3, 2, false, 3);
    auto rn = normalize_deltas(r);
    REQUIRE(rn.max_abs_delta() <= 1);
    for_each_string("ab", 6, [&](const std::string& w) { REQUIRE(accept_counter(rn, w) == accept_counter(r, w)); });
  }
}

TEST_CASE("counter_to_pda") {
  CounterAutomaton eps(1);
  State s = eps.add_state("s");
  eps.set_start(s);
  eps.set_accepting(s);
  eps.add_symbol('a');
  eps.add_symbol('b');
  Pda p = counter_to_pda(eps);
  CHECK(accept_pda(p, ""));
  for_each_string("ab", 6, [&](const std::string& w) {
    if (!w.empty()) REQUIRE_FALSE(accept_pda(p, w));
  });

  for (const auto& e : zoo()) {
    const auto* m = std::get_if<CounterAutomaton>(&e.machine);
    if (!m || m->k() != 1) continue;
    CAPTURE(e.name);
    Pda q = counter_to_pda(*m);
    for_each_string(e.alphabet, 10, [&](const std::string& w) { REQUIRE(accept_pda(q, w) == accept_counter(*m, w)); });
  }

  CHECK_THROWS_AS(counter_to_pda(counter("z2_anbnan")), std::invalid_argument);
  CHECK_THROWS_AS(counter_to_pda(CounterAutomaton(0)), std::invalid_argument);
}

TEST_CASE("counter_to_pda on random one-counter machines with large deltas") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = automata_oracle::random_machine(rng, 3, 1, true, 2);
    Pda p = counter_to_pda(m);
    for_each_string("ab", 6, [&](const std::string& w) { REQUIRE(accept_pda(p, w) == accept_counter(m, w)); });
  }
}

TEST_CASE("NF acceptor") {
  auto m = build_nf_acceptor();
  CHECK(m.k() == 1);
  CHECK(m.max_abs_delta() <= 1);
  CHECK(accept_counter(m, to_symbols(parse_word("ta^2t^-1"))));
  CHECK_FALSE(accept_counter(m, to_symbols(parse_word("t^2a^2t^-2a^-1"))));
  CHECK(accept_counter(m, ""));
  for_each_string("aAtT", 6, [&](const std::string& w) {
    REQUIRE(accept_counter(m, w) == is_normal_form(from_symbols(w)));
  });
  // Long runs, where the counter does the work.
  for (long n : {100L, 1001L, 77777L}) {
    for (long texp : {-3L, 0L, 4L}) {
      Word w = nf_of_element(GroupElement(BigInt(n), 3, texp));
      REQUIRE(accept_counter(m, to_symbols(w)));
      Word shorter = w;
      shorter.pop_back();
      REQUIRE(accept_counter(m, to_symbols(shorter)) == is_normal_form(shorter));
    }
  }
}

TEST_CASE("swap property on the small zoo counter machines") {
  // Accepted words of length >= 2s+1 always have an accepted swap u y x z
  // with |u x y| <= 2s+1.
  for (const auto& e : zoo()) {
    const auto* m = std::get_if<CounterAutomaton>(&e.machine);
    if (!m) continue;
    CAPTURE(e.name);
    std::size_t s = m->num_states();
    std::size_t checked = 0;
    for_each_string(e.alphabet, 2 * s + 5, [&](const std::string& w) {
      if (w.size() < 2 * s + 1 || !accept_counter(*m, w)) return;
      ++checked;
      bool found = false;
      for (const auto& v : swap_variants(w, s)) {
        if (accept_counter(*m, v)) {
          found = true;
          break;
        }
      }
      CAPTURE(w);
      REQUIRE(found);
    });
    CHECK(checked > 0);
  }
}
