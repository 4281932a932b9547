#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bs12/word.hpp"

namespace bs12 {

inline constexpr unsigned kThueMorseMaxIterations = 20;

// f^i(a) for the substitution a -> abc, b -> ac, c -> b. Throws
// std::invalid_argument for i > kThueMorseMaxIterations.
std::string thue_morse(unsigned i);

// True when some non-empty factor xx occurs.
bool has_square(std::string_view s);

// Every u y x z for a factorisation w = u x y z with |x|, |y| > 0 and
// |u x y| <= limit. Includes w itself when some such swap is trivial.
template <class Seq>
std::set<Seq> swap_variants_within(const Seq& w, std::size_t limit) {
  std::set<Seq> out;
  limit = std::min(limit, w.size());
  for (std::size_t u = 0; u < limit; ++u) {
    for (std::size_t x = 1; u + x < limit; ++x) {
      for (std::size_t y = 1; u + x + y <= limit; ++y) {
        Seq v;
        v.insert(v.end(), w.begin(), w.begin() + u);
        v.insert(v.end(), w.begin() + u + x, w.begin() + u + x + y);
        v.insert(v.end(), w.begin() + u, w.begin() + u + x);
        v.insert(v.end(), w.begin() + u + x + y, w.end());
        out.insert(std::move(v));
      }
    }
  }
  return out;
}

// Swaps available to a machine with s states: |u x y| <= 2s + 1.
template <class Seq>
std::set<Seq> swap_variants(const Seq& w, std::size_t s) {
  return swap_variants_within(w, 2 * s + 1);
}

// (n_1, ..., n_k) with w = t^n_1 a t^n_2 a ... a t^n_k for words without A.
using TEncoding = std::vector<std::int64_t>;

TEncoding t_encode(const Word& w);  // throws std::invalid_argument on A or mixed t/T blocks
Word t_decode(const TEncoding& e);  // throws std::invalid_argument on an empty encoding

// The word whose t-encoding is the given symbols mapped a -> s, b -> 2s,
// c -> 3s. It has the form t^s a^e1 t^s ... a^ek t^s with every e_i in {0, 1}.
Word spaced_word(std::string_view symbols, std::int64_t s);

// For u = t^s a^e1 t^s a^e2 ... a^ek t^s with e_i in {0, 1} and some e_i = 1:
// reverse, swap a^0 and a^1, and turn every t^s into t^-s.
Word build_reverse_v(const Word& u, std::int64_t s);

// u a^2 v with v = build_reverse_v(u, s).
Word mesa_word(const Word& u, std::int64_t s);

struct SwapReport {
  unsigned i = 0;
  std::int64_t s = 0;
  std::size_t window = 0;  // swaps stay inside the first 2 * window + 1 encoding values
  std::size_t word_length = 0;
  std::size_t normal_form_length = 0;
  bool geodesic_base = false;
  std::size_t variants_total = 0;
  std::size_t variants_differing = 0;
  std::vector<std::string> variants_geodesic;  // differing variants that stay geodesic
};

// Builds the mesa word for thue_morse(i) with spacing s, swaps blocks of its
// t-encoding, and normalizes every differing variant.
SwapReport swap_experiment(unsigned i, std::int64_t s, std::size_t window);
nlohmann::json to_json(const SwapReport& r);

struct PalindromeReport {
  unsigned i = 0;
  std::string word;  // w w^R
  bool base_accepted = false;
  std::size_t variants_total = 0;
  std::size_t variants_differing = 0;
  std::vector<std::string> variants_accepted;  // differing variants still in the language
};

// w = thue_morse(i); swap variants of w w^R within the first |w| symbols,
// each checked with the w w^R pushdown automaton.
PalindromeReport palindrome_swap_demo(unsigned i);
nlohmann::json to_json(const PalindromeReport& r);

}  // namespace bs12
