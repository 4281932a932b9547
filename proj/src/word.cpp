#include "bs12/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace bs12 {

char symbol(Letter x) {
  switch (x) {
    case Letter::a: return 'a';
    case Letter::A: return 'A';
    case Letter::t: return 't';
    case Letter::T: return 'T';
  }
  return '?';
}

std::optional<Letter> letter_from_symbol(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 't': return Letter::t;
    case 'T': return Letter::T;
    default: return std::nullopt;
  }
}

Word power(Letter x, std::int64_t n) {
  Word w;
  append_power(w, x, n);
  return w;
}

void append_power(Word& w, Letter x, std::int64_t n) {
  Letter y = n < 0 ? inverse(x) : x;
  w.insert(w.end(), static_cast<std::size_t>(n < 0 ? -n : n), y);
}

Word parse_word(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    auto x = letter_from_symbol(s[i]);
    if (!x) {
      throw ParseError("unexpected character '" + std::string(1, s[i]) + "' at offset " +
                       std::to_string(i));
    }
    ++i;
    if (i < s.size() && s[i] == '^') {
      if (*x == Letter::A || *x == Letter::T) {
        throw ParseError("exponent on inverse letter at offset " + std::to_string(i));
      }
      ++i;
      std::size_t j = i;
      if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      std::int64_t n = 0;
      const char* first = s.data() + i + (i < s.size() && s[i] == '+' ? 1 : 0);
      auto [ptr, ec] = std::from_chars(first, s.data() + j, n);
      if (ec != std::errc() || ptr != s.data() + j || j == i) {
        throw ParseError("bad exponent at offset " + std::to_string(i));
      }
      if (n > 100000000 || n < -100000000) throw ParseError("exponent out of range");
      append_power(w, *x, n);
      i = j;
    } else {
      w.push_back(*x);
    }
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    std::size_t n = j - i;
    bool positive = sign(w[i]) > 0;
    char base = is_a_letter(w[i]) ? 'a' : 't';
    out.push_back(base);
    if (n > 1 || !positive) {
      out.push_back('^');
      if (!positive) out.push_back('-');
      out += std::to_string(n);
    }
    i = j;
  }
  return out;
}

std::string to_symbols(const Word& w) {
  std::string s(w.size(), ' ');
  std::transform(w.begin(), w.end(), s.begin(), symbol);
  return s;
}

Word from_symbols(std::string_view s) {
  Word w;
  w.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto x = letter_from_symbol(s[i]);
    if (!x) throw ParseError("not a group letter at offset " + std::to_string(i));
    w.push_back(*x);
  }
  return w;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == inverse(x)) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = inverse(x);
  return out;
}

std::int64_t t_exponent(const Word& w) {
  std::int64_t n = 0;
  for (Letter x : w) {
    if (x == Letter::t) ++n;
    if (x == Letter::T) --n;
  }
  return n;
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

}  // namespace bs12
