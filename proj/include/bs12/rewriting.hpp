#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bs12/word.hpp"

namespace bs12 {

// The ten shapes a geodesic can be brought into. NP_le / NP_gt are NP words
// with t-exponent <= 0 and > 0.
enum class WordType { E, X, N, XN, NP_le, XNP, P, PX, NP_gt, NPX };

std::string to_string(WordType t);
std::optional<WordType> word_type_from_string(std::string_view s);

// Main run direction of a type: N for E, X, N, XN, NP_le, XNP; P otherwise.
enum class RunDirection { N, P };

// t^pre_t, one run, t^post_t. An N-run a^e0 T a^e1 T ... T a^el is stored as
// entries (e0, ..., el) in written order (outermost first); a P-run
// a^e0 t ... t a^el likewise. Negative pre_t/post_t mean powers of T.
struct RunForm {
  std::int64_t pre_t = 0;
  RunDirection dir = RunDirection::N;
  std::vector<std::int64_t> entries;
  std::int64_t post_t = 0;

  friend bool operator==(const RunForm&, const RunForm&) = default;
};

class RunFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::optional<WordType> classify_type(const Word& w);

// Canonical split: if w contains T, the run is the a/A/T middle between
// leading and trailing t-blocks when that parses, else the a/A/t middle
// between T-blocks. Words without T with some a are P-runs; t^p alone is
// pre_t = p with the single entry 0. Throws RunFormatError otherwise.
RunForm encode_run(const Word& w);
Word decode_run(const RunForm& r);

// Regroups the a-letters of a typed word onto the main monotone stretch of
// its t-skeleton, one a-power per level. The result has at most one
// non-trivial run, the same value, and length no greater than w.
Word push_one_run(const Word& w);

RunForm apply_no11(RunForm r);

enum class ViolationKind {
  direction,        // run direction does not fit the context type
  too_large,        // |entry| >= 6
  large_off_end,    // |entry| >= 2 away from the privileged end
  opposite_pair,    // adjacent 1(-1) or (-1)1
  double_one,       // adjacent 11 or (-1)(-1) away from the privileged end
  prefix_suffix,    // privileged three entries not in the allowed set
};

struct Violation {
  ViolationKind kind;
  std::size_t position;  // index into entries
  std::string message;
};

std::vector<Violation> run_violations(const RunForm& r, WordType context);

std::string format_entries(const std::vector<std::int64_t>& entries);  // e.g. "20(-1)"

nlohmann::json to_json(const RunForm& r);
RunForm run_form_from_json(const nlohmann::json& j);

}  // namespace bs12
