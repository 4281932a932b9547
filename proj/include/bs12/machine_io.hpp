#pragma once

#include <filesystem>
#include <set>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "bs12/counter_automaton.hpp"
#include "bs12/pda.hpp"

namespace bs12 {

using Machine = std::variant<CounterAutomaton, Pda>;

// Counter machine:
//   {"type": "counter", "k": 1, "states": [...], "start": "s", "accepts": [...],
//    "alphabet": ["a", ...],
//    "transitions": [{"from": "s", "letter": "a" | null, "delta": [1], "to": "r"}]}
// PDA: "type": "pda", no "k", and transitions carry "pop"/"push" (a stack
// symbol name or null) instead of "delta". "alphabet" is optional on input.
nlohmann::json to_json(const CounterAutomaton& m);
nlohmann::json to_json(const Pda& p);
nlohmann::json to_json(const Machine& m);

CounterAutomaton counter_from_json(const nlohmann::json& j);
Pda pda_from_json(const nlohmann::json& j);
Machine machine_from_json(const nlohmann::json& j);

Machine load_machine(const std::filesystem::path& path);
void save_machine(const Machine& m, const std::filesystem::path& path);

bool accepts(const Machine& m, std::string_view input);
const std::set<Symbol>& alphabet(const Machine& m);

}  // namespace bs12
