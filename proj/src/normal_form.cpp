#include "bs12/normal_form.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "bs12/nf_tables.hpp"
#include "bs12/rewriting.hpp"

namespace bs12 {

namespace {

using Entries = std::vector<std::int64_t>;

struct Parsed {
  std::size_t lead = 0;
  std::size_t trail = 0;
  Entries entries;  // written order
};

std::optional<Parsed> parse_family(const Word& w, Letter edge, Letter sep) {
  Parsed p;
  std::size_t i = 0;
  while (i < w.size() && w[i] == edge) ++i;
  std::size_t j = w.size();
  while (j > i && w[j - 1] == edge) --j;
  p.lead = i;
  p.trail = w.size() - j;
  p.entries.push_back(0);
  for (std::size_t q = i; q < j; ++q) {
    Letter x = w[q];
    if (x == sep) {
      p.entries.push_back(0);
    } else if (is_a_letter(x)) {
      auto& e = p.entries.back();
      if (e != 0 && (e > 0) != (x == Letter::a)) return std::nullopt;
      e += sign(x);
    } else {
      return std::nullopt;
    }
  }
  return p;
}

bool in_patterns(const std::set<Pattern>& s, std::int64_t a, std::int64_t b, std::int64_t c) {
  if (std::abs(a) > 3 || std::abs(b) > 3 || std::abs(c) > 3) return false;
  return s.count(Pattern{static_cast<int>(a), static_cast<int>(b), static_cast<int>(c)}) > 0;
}

// Entries after the privileged three: 0/+-1, no two adjacent nonzero, also
// against the last privileged entry. N-runs: indices 3.. ; P-runs mirrored.
bool n_tail_ok(const Entries& e) {
  for (std::size_t i = 3; i < e.size(); ++i) {
    if (std::abs(e[i]) > 1) return false;
    if (e[i] != 0 && e[i - 1] != 0) return false;
  }
  return true;
}

bool p_tail_ok(const Entries& e) {
  std::size_t n = e.size();
  for (std::size_t i = 0; i + 3 < n; ++i) {
    if (std::abs(e[i]) > 1) return false;
    if (e[i] != 0 && e[i + 1] != 0) return false;
  }
  return true;
}

std::optional<NfFamily> n_side(const Word& w, const NfTables& tables) {
  auto p = parse_family(w, Letter::t, Letter::T);
  if (!p) return std::nullopt;
  const Entries& e = p->entries;
  std::size_t l = e.size() - 1;
  if (l == 0) return std::nullopt;
  std::size_t k = p->lead, m = p->trail;
  if (m > 0 && e.back() == 0) return std::nullopt;
  if (k > 0) {
    if (l < k + m) return std::nullopt;
    if (l <= 2) return tables.section("L1").count(w) ? std::optional(NfFamily::X) : std::nullopt;
    if (!in_patterns(tables.prefix_x, e[0], e[1], e[2]) || !n_tail_ok(e)) return std::nullopt;
    return NfFamily::X;
  }
  if (m > l) return std::nullopt;
  if (l <= 2) return tables.section("L2").count(w) ? std::optional(NfFamily::N) : std::nullopt;
  if (!in_patterns(tables.prefix_n, e[0], e[1], e[2]) || !n_tail_ok(e)) return std::nullopt;
  return NfFamily::N;
}

std::optional<NfFamily> p_side(const Word& w, const NfTables& tables) {
  auto p = parse_family(w, Letter::T, Letter::t);
  if (!p) return std::nullopt;
  const Entries& e = p->entries;
  std::size_t l = e.size() - 1;
  if (l == 0) return std::nullopt;
  std::size_t k = p->lead, m = p->trail;
  if (k > 0 && e.front() == 0) return std::nullopt;
  std::size_t n = e.size();
  if (m == 0) {
    if (k >= l) return std::nullopt;
    if (l <= 2) return tables.section("L3").count(w) ? std::optional(NfFamily::P) : std::nullopt;
    if (!in_patterns(tables.suffix_p, e[n - 3], e[n - 2], e[n - 1]) || !p_tail_ok(e)) return std::nullopt;
    return NfFamily::P;
  }
  if (k + m >= l) return std::nullopt;
  if (l <= 2) return tables.section("L4").count(w) ? std::optional(NfFamily::PX) : std::nullopt;
  if (!in_patterns(tables.suffix_px, e[n - 3], e[n - 2], e[n - 1]) || !p_tail_ok(e)) return std::nullopt;
  return NfFamily::PX;
}

std::size_t bit_length(const BigInt& x) {
  if (x == 0) return 0;
  return boost::multiprecision::msb(boost::multiprecision::abs(x)) + 1;
}

// Signed-digit expansions d[0..l] of M (weight 2^i) with |d| <= 3 in the top
// three positions and, below them, digits in {-1,0,1} without two adjacent
// nonzero ones. Normal-form runs are a subset of these.
void digit_expansions(const BigInt& M, std::size_t l, const std::function<void(const Entries&)>& emit) {
  Entries d(l + 1, 0);
  std::function<void(std::size_t, const BigInt&, bool)> rec = [&](std::size_t i, const BigInt& R, bool prev) {
    if (i == l) {
      if (R >= -3 && R <= 3) {
        d[l] = static_cast<std::int64_t>(R);
        emit(d);
      }
      return;
    }
    // Anything left must fit in positions i..l: |R| < 3 * 2^(l-i+1).
    if (bit_length(R) > l - i + 2) return;
    bool wide = i + 2 >= l;
    BigInt magnitude = boost::multiprecision::abs(R);
    bool odd = boost::multiprecision::bit_test(magnitude, 0);
    static constexpr std::int64_t odd_digits[] = {1, -1, 3, -3};
    static constexpr std::int64_t even_digits[] = {0, 2, -2};
    const std::int64_t* first = odd ? odd_digits : even_digits;
    std::size_t count = odd ? (wide ? 4 : 2) : (wide ? 3 : 1);
    for (std::size_t c = 0; c < count; ++c) {
      std::int64_t digit = first[c];
      if (!wide && prev && digit != 0) continue;
      d[i] = digit;
      BigInt next = (R - digit) / 2;
      rec(i + 1, next, digit != 0);
    }
    d[i] = 0;
  };
  rec(0, M, false);
}

// A Horner-scheme word for g; its length bounds the geodesic length.
std::size_t horner_bound(const GroupElement& g) {
  BigInt n = boost::multiprecision::abs(g.num());
  std::size_t a_len;
  if (n <= 3) {
    a_len = static_cast<std::size_t>(n);
  } else {
    std::size_t L = bit_length(n) - 1;
    std::size_t pop = 0;
    for (std::size_t i = 0; i <= L; ++i) pop += boost::multiprecision::bit_test(n, static_cast<unsigned>(i));
    a_len = 2 * L + pop;
  }
  std::int64_t d = static_cast<std::int64_t>(g.dexp());
  return static_cast<std::size_t>(d) + a_len + static_cast<std::size_t>(std::abs(d + g.texp()));
}

Word assemble(std::int64_t pre, RunDirection dir, const Entries& digits, std::int64_t post) {
  RunForm r;
  r.pre_t = pre;
  r.dir = dir;
  r.post_t = post;
  if (dir == RunDirection::N) {
    r.entries.assign(digits.rbegin(), digits.rend());
  } else {
    r.entries = digits;
  }
  return decode_run(r);
}

}  // namespace

std::string to_string(NfFamily f) {
  switch (f) {
    case NfFamily::E: return "E";
    case NfFamily::X: return "X";
    case NfFamily::N: return "N";
    case NfFamily::P: return "P";
    case NfFamily::PX: return "PX";
  }
  return "?";
}

std::optional<NfFamily> nf_family(const Word& w) {
  bool has_t = std::any_of(w.begin(), w.end(), is_t_letter);
  if (!has_t) {
    if (w.size() > 3) return std::nullopt;
    for (Letter x : w) {
      if (x != w.front()) return std::nullopt;
    }
    return NfFamily::E;
  }
  const auto& tables = builtin_nf_tables();
  if (auto f = n_side(w, tables)) return f;
  return p_side(w, tables);
}

bool is_normal_form(const Word& w) { return nf_family(w).has_value(); }

Word nf_of_element(const GroupElement& g) {
  const BigInt& N = g.num();
  const std::int64_t d = static_cast<std::int64_t>(g.dexp());
  const std::int64_t n = g.texp();
  const std::int64_t ub = static_cast<std::int64_t>(horner_bound(g));

  std::vector<Word> found;
  auto consider = [&](Word w) {
    if (static_cast<std::int64_t>(w.size()) > ub) return;
    if (!is_normal_form(w) || eval_word(w) != g) return;
    if (std::find(found.begin(), found.end(), w) == found.end()) found.push_back(std::move(w));
  };
  // q * 2^s as an integer, for s >= d.
  auto scaled = [&](std::int64_t s) { return BigInt(N << static_cast<unsigned>(s - d)); };

  if (n == 0 && d == 0 && N >= -3 && N <= 3) {
    consider(power(Letter::a, static_cast<std::int64_t>(N)));
  }
  if (n <= 0) {
    // X family: t^k [N-run of l] t^m, with l - k = m - n and M = q 2^(l-k).
    // The top entry is +-2 or +-3 and the next two are small, so
    // bit_length(M) is l+1 or l+2; the window below is generous.
    for (std::int64_t m = 0; 2 * m + 1 - n <= ub; ++m) {
      std::int64_t s = m - n;
      if (s < d) continue;
      BigInt M = scaled(s);
      if (M == 0) break;
      std::int64_t b = static_cast<std::int64_t>(bit_length(M));
      for (std::int64_t l = std::max<std::int64_t>(s + 1, b - 4); l <= b; ++l) {
        std::int64_t k = l - s;
        if (k + l + m > ub) continue;
        digit_expansions(M, static_cast<std::size_t>(l), [&](const Entries& digits) {
          consider(assemble(k, RunDirection::N, digits, m));
        });
      }
    }
    // N family: [N-run of l] t^k, l = k - n, M = q 2^l.
    for (std::int64_t k = 0;; ++k) {
      std::int64_t l = k - n;
      if (k + l > ub) break;
      if (l < 1 || l < d) continue;
      digit_expansions(scaled(l), static_cast<std::size_t>(l), [&](const Entries& digits) {
        consider(assemble(0, RunDirection::N, digits, k));
      });
    }
  } else {
    // P family: t^-k [P-run of l], l = n + k, M = q 2^k.
    for (std::int64_t k = d; 2 * k + n <= ub; ++k) {
      std::int64_t l = n + k;
      digit_expansions(scaled(k), static_cast<std::size_t>(l), [&](const Entries& digits) {
        consider(assemble(-k, RunDirection::P, digits, 0));
      });
    }
    // PX family: t^-k [P-run of l] t^-m, l = n + k + m, M = q 2^k, top entry
    // +-2 or +-3 as in the X family.
    for (std::int64_t k = d; 2 * k + n + 2 <= ub; ++k) {
      BigInt M = scaled(k);
      if (M == 0) break;
      std::int64_t b = static_cast<std::int64_t>(bit_length(M));
      for (std::int64_t l = std::max<std::int64_t>(n + k + 1, b - 4); l <= b; ++l) {
        std::int64_t m = l - n - k;
        if (k + l + m > ub) continue;
        digit_expansions(M, static_cast<std::size_t>(l), [&](const Entries& digits) {
          consider(assemble(-k, RunDirection::P, digits, -m));
        });
      }
    }
  }
  if (found.size() != 1) {
    throw std::logic_error("normal form search for " + to_string(g) + " found " +
                           std::to_string(found.size()) + " candidates");
  }
  return found.front();
}

Word normalize(const Word& w) { return nf_of_element(eval_word(w)); }

std::size_t geodesic_length(const GroupElement& g) { return nf_of_element(g).size(); }

namespace {

// Tails of run entries below the privileged three: values in {-1,0,1}, no
// two adjacent nonzero, `prev_nonzero` for the entry before the first one,
// total |entries| at most budget. `last_nonzero` forces the final entry.
void tails(std::size_t len, bool prev_nonzero, std::int64_t budget, bool last_nonzero,
           const std::function<void(const Entries&)>& emit) {
  Entries cur;
  std::function<void(bool, std::int64_t)> rec = [&](bool prev, std::int64_t left) {
    if (cur.size() == len) {
      if (last_nonzero && (len == 0 || cur.back() == 0)) return;
      emit(cur);
      return;
    }
    for (std::int64_t v : {0, 1, -1}) {
      if (v != 0 && (prev || left == 0)) continue;
      cur.push_back(v);
      rec(v != 0, left - (v != 0 ? 1 : 0));
      cur.pop_back();
    }
  };
  rec(prev_nonzero, budget);
}

std::int64_t abs_sum(const Entries& e) {
  std::int64_t s = 0;
  for (auto x : e) s += std::abs(x);
  return s;
}

}  // namespace

std::vector<Word> enumerate_nf(std::size_t max_len) {
  const auto& tables = builtin_nf_tables();
  const std::int64_t L = static_cast<std::int64_t>(max_len);
  std::set<Word> out;
  auto add = [&](Word w) {
    if (static_cast<std::int64_t>(w.size()) > L) return;
    if (!is_normal_form(w)) {
      throw std::logic_error("shape construction produced a non-normal word " + to_string(w));
    }
    out.insert(std::move(w));
  };

  for (std::int64_t i = -3; i <= 3; ++i) add(power(Letter::a, i));
  for (const char* name : {"L1", "L2", "L3", "L4"}) {
    for (const auto& w : tables.section(name)) add(w);
  }

  // Runs with l >= 3 t-letters: privileged three from the pattern tables,
  // the rest from tails().
  auto n_runs = [&](const std::set<Pattern>& prefixes, std::size_t l, std::int64_t budget, bool last_nonzero,
                    const std::function<void(const Entries&)>& emit) {
    for (const auto& p : prefixes) {
      Entries head{p[0], p[1], p[2]};
      std::int64_t left = budget - abs_sum(head);
      if (left < 0) continue;
      tails(l - 2, head.back() != 0, left, last_nonzero, [&](const Entries& tail) {
        Entries e = head;
        e.insert(e.end(), tail.begin(), tail.end());
        emit(e);
      });
    }
  };
  // P-runs are mirror images of N-runs: first entry is the far end.
  auto p_runs = [&](const std::set<Pattern>& suffixes, std::size_t l, std::int64_t budget, bool first_nonzero,
                    const std::function<void(const Entries&)>& emit) {
    std::set<Pattern> mirrored;
    for (const auto& p : suffixes) mirrored.insert(Pattern{p[2], p[1], p[0]});
    n_runs(mirrored, l, budget, first_nonzero, [&](const Entries& e) {
      emit(Entries(e.rbegin(), e.rend()));
    });
  };

  for (std::int64_t l = 3; l <= L; ++l) {
    // X family
    for (std::int64_t k = 1; k <= l; ++k) {
      for (std::int64_t m = 0; k + m <= l && k + l + m <= L; ++m) {
        n_runs(tables.prefix_x, static_cast<std::size_t>(l), L - k - l - m, m > 0, [&](const Entries& e) {
          add(decode_run({k, RunDirection::N, e, m}));
        });
      }
    }
    // N family
    for (std::int64_t k = 0; k <= l && k + l <= L; ++k) {
      n_runs(tables.prefix_n, static_cast<std::size_t>(l), L - k - l, k > 0, [&](const Entries& e) {
        add(decode_run({0, RunDirection::N, e, k}));
      });
    }
    // P family
    for (std::int64_t k = 0; k < l && k + l <= L; ++k) {
      p_runs(tables.suffix_p, static_cast<std::size_t>(l), L - k - l, k > 0, [&](const Entries& e) {
        add(decode_run({-k, RunDirection::P, e, 0}));
      });
    }
    // PX family
    for (std::int64_t k = 0; k < l; ++k) {
      for (std::int64_t m = 1; k + m < l && k + l + m <= L; ++m) {
        p_runs(tables.suffix_px, static_cast<std::size_t>(l), L - k - l - m, k > 0, [&](const Entries& e) {
          add(decode_run({-k, RunDirection::P, e, -m}));
        });
      }
    }
  }
  std::vector<Word> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end(), shortlex_less);
  return sorted;
}

}  // namespace bs12
