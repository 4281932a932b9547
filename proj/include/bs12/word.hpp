#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bs12 {

// Generators of BS(1,2) = <a, t | t a t^-1 = a^2> and their inverses.
// A = a^-1, T = t^-1. The declaration order is the letter order used by
// shortlex comparisons.
enum class Letter : std::uint8_t { a, A, t, T };

using Word = std::vector<Letter>;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr Letter inverse(Letter x) {
  switch (x) {
    case Letter::a: return Letter::A;
    case Letter::A: return Letter::a;
    case Letter::t: return Letter::T;
    case Letter::T: return Letter::t;
  }
  return x;
}

constexpr bool is_a_letter(Letter x) { return x == Letter::a || x == Letter::A; }
constexpr bool is_t_letter(Letter x) { return x == Letter::t || x == Letter::T; }

// +1 for a and t, -1 for A and T.
constexpr int sign(Letter x) { return (x == Letter::a || x == Letter::t) ? 1 : -1; }

char symbol(Letter x);
std::optional<Letter> letter_from_symbol(char c);

// Grammar: a sequence of tokens a, A, t, T, a^<int>, t^<int>; whitespace is
// ignored. Exponents may be negative or zero. A^n and T^n are rejected.
Word parse_word(std::string_view text);

// Compact rendering using the parse grammar, e.g. "ta^2t^-1a". The empty word
// renders as the empty string.
std::string to_string(const Word& w);

// One character per letter, from the alphabet {a, A, t, T}.
std::string to_symbols(const Word& w);
Word from_symbols(std::string_view s);

Word free_reduce(const Word& w);
Word inverse(const Word& w);
std::int64_t t_exponent(const Word& w);

Word power(Letter x, std::int64_t n);  // x^n, using the inverse letter when n < 0
void append_power(Word& w, Letter x, std::int64_t n);

// Shortlex: shorter first, then lexicographic with a < A < t < T.
bool shortlex_less(const Word& u, const Word& v);

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

}  // namespace bs12
