#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bs12 {

struct SuiteOptions {
  std::optional<std::size_t> radius;  // overrides the ball radius (suites 2 and 10)
  std::uint64_t seed = 20240601;       // random machines for the closure suite
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// relator, nf-trichotomy, nf-acceptor, counter-to-pda, zoo, closure,
// thue-morse, t-encoding, mesa-swap, growth (ids 1..10).
const std::vector<std::string>& suite_names();

// Runs one suite; throws std::invalid_argument for an unknown name.
CriterionResult run_suite(std::string_view name, const SuiteOptions& options = {});

// "PASS  3 nf-acceptor  (1.2 s)  detail"
std::string format_result(const CriterionResult& r);

}  // namespace bs12
