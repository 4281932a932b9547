#include <doctest.h>

#include "bs12/oracle.hpp"
#include "bs12/rewriting.hpp"
#include "oracles.hpp"

using namespace bs12;

namespace {
Word W(const char* s) { return parse_word(s); }

RunForm N(std::vector<std::int64_t> e, std::int64_t pre = 0, std::int64_t post = 0) {
  return {pre, RunDirection::N, std::move(e), post};
}
RunForm P(std::vector<std::int64_t> e, std::int64_t pre = 0, std::int64_t post = 0) {
  return {pre, RunDirection::P, std::move(e), post};
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  for (const auto& x : v) {
    if (x.kind == k) return true;
  }
  return false;
}

const Ball& ball10() {
  static const Ball b = bfs_ball(10);
  return b;
}
}  // namespace

TEST_CASE("classify_type") {
  CHECK(classify_type(W("a^2")) == WordType::E);
  CHECK(classify_type(Word{}) == WordType::E);
  CHECK(classify_type(W("t^2a^2t^-2")) == WordType::X);
  CHECK(classify_type(W("at^-1at")) == WordType::NP_le);
  CHECK(classify_type(W("t^-1at^2")) == WordType::NP_gt);
  CHECK(classify_type(W("at^-1a")) == WordType::N);
  CHECK(classify_type(W("tat")) == WordType::P);
  CHECK(classify_type(W("tat^-2")) == WordType::XN);
  CHECK(classify_type(W("t^2at^-1")) == WordType::PX);
  CHECK(classify_type(W("tat^-2at")) == WordType::XNP);
  CHECK(classify_type(W("t^-1at^3at^-1")) == WordType::NPX);
  // PNP with positive exponent and NPN with non-positive exponent fit no type.
  CHECK_FALSE(classify_type(W("tat^-1at^2")).has_value());
  CHECK_FALSE(classify_type(W("t^-1at^2at^-2")).has_value());
  CHECK_FALSE(classify_type(W("tt^-1tt^-1t")).has_value());
}

TEST_CASE("type names") {
  for (auto t : {WordType::E, WordType::X, WordType::N, WordType::XN, WordType::NP_le, WordType::XNP, WordType::P,
                 WordType::PX, WordType::NP_gt, WordType::NPX}) {
    CHECK(word_type_from_string(to_string(t)) == t);
  }
  CHECK_FALSE(word_type_from_string("Q").has_value());
}

TEST_CASE("encode_run examples") {
  CHECK(encode_run(W("a^2t^-1at^-1a^0t^-1at^-1a^-1")) == N({2, 1, 0, 1, -1}));
  CHECK(encode_run(W("t^2a^2t^-1at^-2")) == N({2, 1, 0, 0}, 2, 0));
  RunForm t3 = encode_run(W("t^3"));
  CHECK(t3.pre_t == 3);
  CHECK(t3.entries == std::vector<std::int64_t>{0});
  CHECK(t3.post_t == 0);
  CHECK(encode_run(W("atta^2")) == P({1, 0, 2}));
  CHECK(encode_run(W("t^-1ata")).pre_t == -1);
  CHECK(encode_run(W("tat^-1at")) == N({1, 1}, 1, 1));
  CHECK_THROWS_AS(encode_run(W("at^-1ata")), RunFormatError);
}

TEST_CASE("decode_run examples") {
  CHECK(decode_run(N({2, 1, 0, 1, -1})) == W("a^2t^-1at^-1t^-1at^-1a^-1"));
  CHECK(decode_run(P({1, 0, 2})) == W("atta^2"));
  CHECK(decode_run(N({}, -2)) == W("t^-2"));
}

TEST_CASE("encode/decode round trip on one-run words of length <= 10") {
  std::size_t runs = 0;
  for (const auto& w : oracle::reduced_words(10)) {
    RunForm r;
    try {
      r = encode_run(w);
    } catch (const RunFormatError&) {
      continue;
    }
    ++runs;
    REQUIRE(decode_run(r) == w);
    std::int64_t seps = 0;
    for (Letter x : w) {
      if (x == (r.dir == RunDirection::N ? Letter::T : Letter::t)) ++seps;
    }
    // Every separator letter of the run direction sits inside the run.
    REQUIRE(static_cast<std::int64_t>(r.entries.size()) == seps + 1);
  }
  CHECK(runs > 10000);
}

TEST_CASE("push_one_run on all typed words of length <= 10") {
  const Ball& ball = ball10();
  std::size_t typed = 0, geodesic = 0;
  for (const auto& w : oracle::reduced_words(10)) {
    if (!classify_type(w)) {
      CHECK_THROWS_AS(push_one_run(w), RunFormatError);
      continue;
    }
    ++typed;
    Word v = push_one_run(w);
    REQUIRE(eval_word(v) == eval_word(w));
    REQUIRE(v.size() <= w.size());
    // At most one non-trivial run: the result is t^p [run] t^q.
    RunForm r = encode_run(v);
    REQUIRE(decode_run(r) == v);
    if (is_geodesic(w, ball)) {
      ++geodesic;
      REQUIRE(v.size() == w.size());
    }
  }
  CHECK(typed > 0);
  CHECK(geodesic > 0);
}

TEST_CASE("push_one_run regroups per level") {
  CHECK(push_one_run(W("t^2at^-1at^-1a")) == W("t^2at^-1at^-1a"));
  // a^e0 t a^e1 t a^n t^-1 a^h1 t^-1 a^h0 with (e0, e1, n, h1, h0) = (1, -1, 3, 1, 1)
  Word w = W("ata^-1ta^3t^-1at^-1a");
  CHECK(push_one_run(w) == W("t^2a^3t^-2a^2"));
  Word x = W("atat^-2");
  Word y = push_one_run(x);
  CHECK(eval_word(y) == eval_word(x));
  CHECK(y.size() == x.size());
}

TEST_CASE("apply_no11 examples") {
  CHECK(apply_no11(N({0, 1, 1})) == N({1, 0, -1}));
  CHECK(apply_no11(N({2, 0, 0})) == N({2, 0, 0}));
  CHECK(apply_no11(P({1, 1, 0})) == P({-1, 0, 1}));
  CHECK(apply_no11(N({0, -1, -1})) == N({-1, 0, 1}));
  CHECK(apply_no11(P({-1, -1, 2})) == P({1, 0, 1}));
}

TEST_CASE("apply_no11 preserves value and never lengthens (entries -3..3, up to 7 entries)") {
  const Ball& ball = ball10();
  std::size_t geodesic = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 7;
    for (std::size_t c = 0; c < combos; ++c) {
      std::vector<std::int64_t> e(n);
      std::size_t x = c;
      for (std::size_t i = 0; i < n; ++i, x /= 7) e[i] = static_cast<std::int64_t>(x % 7) - 3;
      for (auto dir : {RunDirection::N, RunDirection::P}) {
        RunForm r{0, dir, e, 0};
        RunForm s = apply_no11(r);
        Word before = decode_run(r), after = decode_run(s);
        REQUIRE(after.size() <= before.size());
        REQUIRE(eval_word(after) == eval_word(before));
        REQUIRE(s.entries.size() == e.size());
        // On geodesic runs only isolated unit entries survive outside the
        // privileged pair.
        if (before.size() <= ball.radius() && is_geodesic(before, ball)) {
          ++geodesic;
          for (std::size_t i = 0; i + 1 < n; ++i) {
            bool privileged = dir == RunDirection::N ? i == 0 : i + 2 == n;
            if (!privileged) {
              CAPTURE(format_entries(e));
              REQUIRE(std::abs(s.entries[i] * s.entries[i + 1]) != 1);
            }
          }
        }
      }
    }
  }
  CHECK(geodesic > 100);
}

TEST_CASE("run_violations") {
  auto v = run_violations(N({2, 0, -1}, 2, 0), WordType::X);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::prefix_suffix);
  CHECK(v[0].message == "prefix 20(-1) forbidden");
  CHECK(run_violations(N({3, 0, -1}, 2, 0), WordType::X).empty());

  for (auto ctx : {WordType::N, WordType::X, WordType::NP_le}) {
    CHECK(has_kind(run_violations(N({0, 1, -1, 0}), ctx), ViolationKind::opposite_pair));
  }
  CHECK(has_kind(run_violations(P({0, -1, 1, 0}), WordType::P), ViolationKind::opposite_pair));
  CHECK(has_kind(run_violations(N({6, 0, 0}), WordType::N), ViolationKind::too_large));
  CHECK(has_kind(run_violations(N({0, 2, 0}), WordType::N), ViolationKind::large_off_end));
  CHECK(has_kind(run_violations(N({0, 0, 1, 1}), WordType::N), ViolationKind::double_one));
  CHECK(has_kind(run_violations(N({2, 0, 0}), WordType::P), ViolationKind::direction));
  // Several problems are all reported.
  auto many = run_violations(N({7, 0, 2, 1, -1}), WordType::N);
  CHECK(has_kind(many, ViolationKind::too_large));
  CHECK(has_kind(many, ViolationKind::large_off_end));
  CHECK(has_kind(many, ViolationKind::opposite_pair));
}

TEST_CASE("rewrite pairs evaluate equal and shorten as claimed") {
  struct Pair {
    const char* lhs;
    const char* rhs;
    bool strictly_shorter;
  };
  const Pair pairs[] = {
      {"a^6", "ta^3t^-1", true},
      {"t^-1a^2", "at^-1", true},
      {"t^-1a^-2", "a^-1t^-1", true},
      {"a^2t", "ta", true},
      {"a^-2t", "ta^-1", true},
      {"at^-1a^-1", "t^-1a", true},
      {"a^-1t^-1a", "t^-1a^-1", true},
      {"ata^-1", "a^-1t", true},
      {"a^-1ta", "at", true},
      {"t^-1at^-1a", "at^-2a^-1", false},
      {"at^-1at^-1a", "a^2t^-2a^-1", false},
      {"a^-1t^-1a^-1t^-1a^-1", "a^-2t^-2a", false},
      {"atata", "a^-1t^2a^2", false},
  };
  for (const auto& p : pairs) {
    Word l = W(p.lhs), r = W(p.rhs);
    CAPTURE(std::string(p.lhs));
    CHECK(eval_word(l) == eval_word(r));
    if (p.strictly_shorter) {
      CHECK(r.size() < l.size());
    } else {
      CHECK(r.size() <= l.size());
    }
  }
}

TEST_CASE("format_entries and JSON") {
  CHECK(format_entries({2, 1, 0, 1, -1}) == "2101(-1)");
  CHECK(format_entries({}) == "");
  RunForm r = N({3, 0, -1}, 2, -1);
  auto j = to_json(r);
  CHECK(j["dir"] == "N");
  CHECK(j["pre_t"] == 2);
  CHECK(j["post_t"] == -1);
  CHECK(run_form_from_json(j) == r);
  CHECK(run_form_from_json(to_json(P({1, 0, 2}))) == P({1, 0, 2}));
}
