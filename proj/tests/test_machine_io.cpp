#include <doctest.h>

#include <filesystem>

#include "bs12/machine_io.hpp"
#include "bs12/nf_acceptor.hpp"
#include "bs12/nf_tables.hpp"
#include "bs12/strings.hpp"
#include "bs12/zoo.hpp"

using namespace bs12;

TEST_CASE("zoo machines survive a JSON round trip") {
  for (const auto& e : zoo()) {
    CAPTURE(e.name);
    auto j = to_json(e.machine);
    Machine back = machine_from_json(j);
    CHECK(back.index() == e.machine.index());
    CHECK(to_json(back) == j);
    for_each_string(e.alphabet, 7, [&](const std::string& w) { REQUIRE(accepts(back, w) == accepts(e.machine, w)); });
  }
}

TEST_CASE("counter machine JSON layout") {
  CounterAutomaton m(1);
  State s = m.add_state("s"), f = m.add_state("f");
  m.set_start(s);
  m.set_accepting(f);
  m.add_transition(s, 'a', {1}, s);
  m.add_transition(s, std::nullopt, {0}, f);
  m.add_transition(f, 'b', {-1}, f);
  auto j = to_json(m);
  CHECK(j["type"] == "counter");
  CHECK(j["k"] == 1);
  CHECK(j["states"] == nlohmann::json{"s", "f"});
  CHECK(j["start"] == "s");
  CHECK(j["accepts"] == nlohmann::json{"f"});
  CHECK(j["transitions"][1]["letter"].is_null());
  CHECK(j["transitions"][2]["delta"] == nlohmann::json{-1});
  auto back = counter_from_json(j);
  CHECK(accept_counter(back, "aabb"));
  CHECK_FALSE(accept_counter(back, "aab"));
}

TEST_CASE("machine files from other tools") {
  // No "type", no "alphabet": a counter machine with alphabet from its edges.
  auto j = nlohmann::json::parse(R"({
    "k": 1, "states": ["p", "q"], "start": "p", "accepts": ["q"],
    "transitions": [{"from": "p", "letter": "a", "delta": [1], "to": "p"},
                    {"from": "p", "letter": "b", "delta": [-1], "to": "q"},
                    {"from": "q", "letter": "b", "delta": [-1], "to": "q"}]})");
  Machine m = machine_from_json(j);
  REQUIRE(std::holds_alternative<CounterAutomaton>(m));
  CHECK(accepts(m, "aabb"));
  CHECK(alphabet(m) == std::set<Symbol>{'a', 'b'});

  auto p = nlohmann::json::parse(R"({
    "type": "pda", "states": ["s", "f"], "start": "s", "accepts": ["f"],
    "transitions": [{"from": "s", "letter": "a", "pop": null, "push": "X", "to": "s"},
                    {"from": "s", "letter": null, "pop": null, "push": null, "to": "f"},
                    {"from": "f", "letter": "b", "pop": "X", "push": null, "to": "f"}]})");
  Machine q = machine_from_json(p);
  REQUIRE(std::holds_alternative<Pda>(q));
  CHECK(accepts(q, "aab"));
  CHECK_FALSE(accepts(q, "abb"));

  CHECK_THROWS(machine_from_json(nlohmann::json::parse(R"({"k": 1, "states": ["p"], "start": "zz", "accepts": [], "transitions": []})")));
  CHECK_THROWS(machine_from_json(nlohmann::json::parse(R"({"type": "dfa"})")));
}

TEST_CASE("NF acceptor file round trip") {
  auto path = std::filesystem::temp_directory_path() / "bs12_nf_acceptor_test.json";
  CounterAutomaton m = build_nf_acceptor();
  save_machine(m, path);
  Machine back = load_machine(path);
  std::filesystem::remove(path);
  REQUIRE(std::holds_alternative<CounterAutomaton>(back));
  const auto& c = std::get<CounterAutomaton>(back);
  CHECK(c.num_states() == m.num_states());
  CHECK(c.transitions().size() == m.transitions().size());
  for_each_string("aAtT", 5, [&](const std::string& w) { REQUIRE(accept_counter(c, w) == accept_counter(m, w)); });
  CHECK_THROWS(load_machine(path));
}

TEST_CASE("table text round trip") {
  const NfTables& t = builtin_nf_tables();
  NfTables again = NfTables::parse(t.to_text());
  CHECK(again.words == t.words);
  CHECK(again.prefix_x == t.prefix_x);
  CHECK(again.prefix_n == t.prefix_n);
  CHECK(again.suffix_p == t.suffix_p);
  CHECK(again.suffix_px == t.suffix_px);
  CHECK_FALSE(t.prefix_x.empty());
  CHECK(t.prefix_x.count(Pattern{3, 0, -1}) == 1);
  CHECK(t.prefix_x.count(Pattern{2, 0, -1}) == 0);

  NfTables small = NfTables::parse("# comment\n[L1]\nta^2t^-1\n\n[PREFIX_X]\n2 0 0\n");
  CHECK(small.section("L1").size() == 1);
  CHECK(small.prefix_x == std::set<Pattern>{{2, 0, 0}});
  CHECK_THROWS(NfTables::parse("[NOPE]\na\n"));
  CHECK_THROWS(NfTables::parse("a\n"));
}
