#include <doctest.h>

#include <random>

#include "bs12/experiments.hpp"
#include "bs12/normal_form.hpp"
#include "bs12/rewriting.hpp"
#include "bs12/zoo.hpp"

using namespace bs12;

namespace {
Word W(const char* s) { return parse_word(s); }

bool naive_square(const std::string& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t l = 1; i + 2 * l <= s.size(); ++l) {
      if (s.compare(i, l, s, i + l, l) == 0) return true;
    }
  }
  return false;
}
}  // namespace

TEST_CASE("thue_morse") {
  CHECK(thue_morse(0) == "a");
  CHECK(thue_morse(1) == "abc");
  CHECK(thue_morse(2) == "abcacb");
  CHECK(thue_morse(3) == "abcacbabcbac");
  CHECK_THROWS_AS(thue_morse(21), std::invalid_argument);
  // Lengths follow the substitution a -> 3, b -> 2, c -> 1.
  std::size_t na = 1, nb = 0, nc = 0;
  for (unsigned i = 0; i <= 10; ++i) {
    std::string w = thue_morse(i);
    CHECK(w.size() == na + nb + nc);
    CHECK_FALSE(has_square(w));
    std::size_t a = na, b = nb, c = nc;
    na = a + b;
    nb = a + c;
    nc = a + b;
  }
}

TEST_CASE("has_square") {
  CHECK_FALSE(has_square("abcacb"));
  CHECK(has_square("abab"));
  CHECK(has_square("aa"));
  CHECK_FALSE(has_square(""));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> pick(0, 2), len(0, 16);
  for (int trial = 0; trial < 3000; ++trial) {
    std::string s;
    for (int n = len(rng); n > 0; --n) s.push_back("abc"[pick(rng)]);
    REQUIRE(has_square(s) == naive_square(s));
  }
  std::string tm = thue_morse(12);
  CHECK_FALSE(has_square(tm.substr(0, 400)));
}

TEST_CASE("swap_variants") {
  CHECK(swap_variants(std::string("ab"), 1) == std::set<std::string>{"ba"});
  CHECK(swap_variants(std::string("aa"), 1) == std::set<std::string>{"aa"});
  // |u x y| <= 3 on "abc": u = "", (x, y) in {(a, b), (a, bc), (ab, c)}; u = "a", (x, y) = (b, c).
  CHECK(swap_variants(std::string("abc"), 1) == std::set<std::string>{"bac", "bca", "cab", "acb"});
  // Brute force over all decompositions.
  std::string w = "abcdefg";
  for (std::size_t limit = 0; limit <= 8; ++limit) {
    std::set<std::string> expect;
    for (std::size_t u = 0; u <= w.size(); ++u) {
      for (std::size_t x = 1; u + x <= w.size(); ++x) {
        for (std::size_t y = 1; u + x + y <= w.size(); ++y) {
          if (u + x + y > limit) continue;
          expect.insert(w.substr(0, u) + w.substr(u + x, y) + w.substr(u, x) + w.substr(u + x + y));
        }
      }
    }
    CHECK(swap_variants_within(w, limit) == expect);
  }
}

TEST_CASE("t-encoding") {
  CHECK(t_encode(W("at^2a^2ta^3t^4at^-9at^2at^-1")) ==
        TEncoding{0, 2, 0, 1, 0, 0, 4, -9, 2, -1});
  CHECK(t_encode(W("a")) == TEncoding{0, 0});
  CHECK(t_encode(Word{}) == TEncoding{0});
  CHECK(t_decode(TEncoding{0, 0}) == W("a"));
  CHECK_THROWS_AS(t_encode(W("a^-1")), std::invalid_argument);
  CHECK_THROWS_AS(t_encode(W("tt^-1")), std::invalid_argument);
  CHECK_THROWS_AS(t_decode(TEncoding{}), std::invalid_argument);

  std::mt19937 rng(2);
  std::uniform_int_distribution<int> count(0, 5), block(-6, 6), blocks(1, 8);
  for (int trial = 0; trial < 1000; ++trial) {
    TEncoding e;
    for (int n = blocks(rng); n > 0; --n) e.push_back(block(rng));
    Word w = t_decode(e);
    REQUIRE(t_encode(w) == e);
    REQUIRE(t_decode(t_encode(w)) == w);
  }
}

TEST_CASE("spaced_word and build_reverse_v") {
  CHECK(spaced_word("ab", 2) == W("t^2at^4"));
  CHECK(spaced_word("acb", 1) == W("tat^3at^2"));
  Word u = spaced_word(thue_morse(3), 10);
  CHECK(t_encode(u) == TEncoding{10, 20, 30, 10, 30, 20, 10, 20, 30, 20, 10, 30});
  Word v = build_reverse_v(u, 10);
  CHECK(t_encode(v) == TEncoding{-10, -10, -30, -20, -10, -20, -30, -20, -10, -30, -10, -20, -20});
  CHECK(t_exponent(v) == -t_exponent(u));

  // k = 1: t^s a t^s reverses to itself, the single a is dropped, and both
  // blocks turn negative.
  Word one = build_reverse_v(W("t^3at^3"), 3);
  CHECK(one == W("t^-6"));

  std::mt19937 rng(4);
  std::uniform_int_distribution<int> sym(0, 2), len(2, 12), sp(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::string s;
    for (int n = len(rng); n > 0; --n) s.push_back("abc"[sym(rng)]);
    int spacing = sp(rng);
    Word x = spaced_word(s, spacing);
    REQUIRE(t_exponent(build_reverse_v(x, spacing)) == -t_exponent(x));
  }

  CHECK_THROWS_AS(build_reverse_v(W("t^3t^3"), 3), std::invalid_argument);
  CHECK_THROWS_AS(build_reverse_v(W("t^2at^3"), 3), std::invalid_argument);
  CHECK_THROWS_AS(build_reverse_v(W("t^3a^2t^3"), 3), std::invalid_argument);
  CHECK_THROWS_AS(mesa_word(W("t^3t^3"), 3), std::invalid_argument);
}

TEST_CASE("mesa words are geodesic") {
  for (unsigned i : {1u, 2u, 3u}) {
    for (std::int64_t s : {4, 5, 10}) {
      Word w = mesa_word(spaced_word(thue_morse(i), s), s);
      CAPTURE(i);
      CAPTURE(s);
      CHECK(classify_type(w) == WordType::X);
      CHECK(normalize(w).size() == w.size());
      CHECK(eval_word(w).texp() == 0);
    }
  }
}

TEST_CASE("swap experiment, small scale") {
  auto r = swap_experiment(2, 4, 3);
  CHECK(r.geodesic_base);
  CHECK(r.word_length == r.normal_form_length);
  CHECK(r.variants_differing > 0);
  CHECK(r.variants_differing <= r.variants_total);
  CHECK(r.variants_geodesic.empty());
  auto j = to_json(r);
  CHECK(j["geodesic_base"] == true);
  CHECK(j["variants_geodesic"].empty());
  CHECK(j["variants_differing"] == r.variants_differing);
}

TEST_CASE("palindrome swap demo") {
  auto r0 = palindrome_swap_demo(0);
  CHECK(r0.word == "aa");
  CHECK(r0.base_accepted);
  CHECK(r0.variants_differing == 0);
  for (unsigned i : {2u, 3u}) {
    auto r = palindrome_swap_demo(i);
    std::string w = thue_morse(i);
    CHECK(r.word == w + std::string(w.rbegin(), w.rend()));
    CHECK(r.base_accepted);
    CHECK(r.variants_differing > 0);
    CHECK(r.variants_accepted.empty());
    CHECK(is_ww_reverse(r.word));
  }
}
