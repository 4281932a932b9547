#include "bs12/experiments.hpp"

#include <stdexcept>

#include "bs12/normal_form.hpp"
#include "bs12/zoo.hpp"

namespace bs12 {

std::string thue_morse(unsigned i) {
  if (i > kThueMorseMaxIterations) {
    throw std::invalid_argument("thue_morse: i = " + std::to_string(i) + " exceeds the guard " +
                                std::to_string(kThueMorseMaxIterations));
  }
  std::string w = "a";
  for (unsigned step = 0; step < i; ++step) {
    std::string next;
    next.reserve(w.size() * 2);
    for (char c : w) {
      switch (c) {
        case 'a': next += "abc"; break;
        case 'b': next += "ac"; break;
        default: next += "b"; break;
      }
    }
    w = std::move(next);
  }
  return w;
}

bool has_square(std::string_view s) {
  const std::size_t n = s.size();
  for (std::size_t half = 1; 2 * half <= n; ++half) {
    std::size_t run = 0;  // consecutive i with s[i] == s[i + half]
    for (std::size_t i = 0; i + half < n; ++i) {
      run = s[i] == s[i + half] ? run + 1 : 0;
      if (run == half) return true;
    }
  }
  return false;
}

TEncoding t_encode(const Word& w) {
  TEncoding e{0};
  int block_sign = 0;  // sign of the t-letters in the current block
  for (Letter x : w) {
    switch (x) {
      case Letter::a:
        e.push_back(0);
        block_sign = 0;
        break;
      case Letter::A: throw std::invalid_argument("t_encode: word contains a^-1");
      case Letter::t:
      case Letter::T:
        if (block_sign != 0 && block_sign != sign(x)) {
          throw std::invalid_argument("t_encode: block mixes t and t^-1 in " + to_string(w));
        }
        block_sign = sign(x);
        e.back() += sign(x);
        break;
    }
  }
  return e;
}

Word t_decode(const TEncoding& e) {
  if (e.empty()) throw std::invalid_argument("t_decode: empty encoding");
  Word w;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) w.push_back(Letter::a);
    append_power(w, Letter::t, e[i]);
  }
  return w;
}

Word spaced_word(std::string_view symbols, std::int64_t s) {
  if (s <= 0) throw std::invalid_argument("spacing must be positive");
  TEncoding e;
  for (char c : symbols) {
    if (c < 'a' || c > 'c') throw std::invalid_argument("symbols must be a, b or c");
    e.push_back((c - 'a' + 1) * s);
  }
  if (e.empty()) throw std::invalid_argument("no symbols");
  return t_decode(e);
}

namespace {

// e_1..e_k of u = t^s a^e1 t^s ... a^ek t^s.
std::vector<int> spaced_exponents(const Word& u, std::int64_t s) {
  if (s <= 0) throw std::invalid_argument("spacing must be positive");
  TEncoding e = t_encode(u);
  std::vector<int> bits;
  bool any = false;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] <= 0 || e[i] % s != 0) {
      throw std::invalid_argument("shape: t-blocks must be positive multiples of " + std::to_string(s));
    }
    if (i > 0) {
      bits.push_back(1);
      any = true;
    }
    // A block t^(c s) is c copies of t^s separated by a^0.
    for (std::int64_t j = 1; j < e[i] / s; ++j) bits.push_back(0);
  }
  if (!any) throw std::invalid_argument("shape: u needs at least one a");
  return bits;
}

}  // namespace

Word build_reverse_v(const Word& u, std::int64_t s) {
  std::vector<int> bits = spaced_exponents(u, s);
  Word v = power(Letter::T, s);
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    if (*it == 0) v.push_back(Letter::a);
    append_power(v, Letter::T, s);
  }
  return v;
}

Word mesa_word(const Word& u, std::int64_t s) {
  Word v = build_reverse_v(u, s);
  Word w = u;
  w.push_back(Letter::a);
  w.push_back(Letter::a);
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

SwapReport swap_experiment(unsigned i, std::int64_t s, std::size_t window) {
  SwapReport r;
  r.i = i;
  r.s = s;
  r.window = window;
  Word u = spaced_word(thue_morse(i), s);
  Word w = mesa_word(u, s);
  r.word_length = w.size();
  r.normal_form_length = normalize(w).size();
  r.geodesic_base = r.normal_form_length == w.size();

  TEncoding enc = t_encode(w);
  auto variants = swap_variants(enc, window);
  r.variants_total = variants.size();
  for (const auto& e : variants) {
    if (e == enc) continue;
    ++r.variants_differing;
    Word x = t_decode(e);
    if (normalize(x).size() >= x.size()) r.variants_geodesic.push_back(to_string(x));
  }
  return r;
}

nlohmann::json to_json(const SwapReport& r) {
  return {{"i", r.i},
          {"s", r.s},
          {"window", r.window},
          {"word_length", r.word_length},
          {"normal_form_length", r.normal_form_length},
          {"geodesic_base", r.geodesic_base},
          {"variants_total", r.variants_total},
          {"variants_differing", r.variants_differing},
          {"variants_geodesic", r.variants_geodesic}};
}

PalindromeReport palindrome_swap_demo(unsigned i) {
  PalindromeReport r;
  r.i = i;
  std::string w = thue_morse(i);
  r.word = w + std::string(w.rbegin(), w.rend());
  const auto& pda = zoo_entry("pda_ww_reverse").machine;
  r.base_accepted = accepts(pda, r.word);
  auto variants = swap_variants_within(r.word, w.size());
  r.variants_total = variants.size();
  for (const auto& v : variants) {
    if (v == r.word) continue;
    ++r.variants_differing;
    if (accepts(pda, v)) r.variants_accepted.push_back(v);
  }
  return r;
}

nlohmann::json to_json(const PalindromeReport& r) {
  return {{"i", r.i},
          {"word", r.word},
          {"base_accepted", r.base_accepted},
          {"variants_total", r.variants_total},
          {"variants_differing", r.variants_differing},
          {"variants_accepted", r.variants_accepted}};
}

}  // namespace bs12
