#include "bs12/rewriting.hpp"

#include <array>
#include <map>

#include "bs12/nf_tables.hpp"

namespace bs12 {

namespace {

constexpr std::array<std::pair<WordType, const char*>, 10> kTypeNames{{
    {WordType::E, "E"},
    {WordType::X, "X"},
    {WordType::N, "N"},
    {WordType::XN, "XN"},
    {WordType::NP_le, "NP<="},
    {WordType::XNP, "XNP"},
    {WordType::P, "P"},
    {WordType::PX, "PX"},
    {WordType::NP_gt, "NP>"},
    {WordType::NPX, "NPX"},
}};

RunDirection main_direction(WordType t) {
  switch (t) {
    case WordType::P:
    case WordType::PX:
    case WordType::NP_gt:
    case WordType::NPX: return RunDirection::P;
    default: return RunDirection::N;
  }
}

// Splits off maximal blocks of `edge` at both ends; the middle must use only
// a, A and `sep`, with single-signed a-blocks.
std::optional<RunForm> parse_run(const Word& w, Letter edge, Letter sep, RunDirection dir) {
  std::size_t i = 0;
  while (i < w.size() && w[i] == edge) ++i;
  std::size_t j = w.size();
  while (j > i && w[j - 1] == edge) --j;
  RunForm r;
  r.dir = dir;
  std::int64_t s = sign(edge);
  r.pre_t = s * static_cast<std::int64_t>(i);
  r.post_t = s * static_cast<std::int64_t>(w.size() - j);
  r.entries.push_back(0);
  for (std::size_t p = i; p < j; ++p) {
    Letter x = w[p];
    if (x == sep) {
      r.entries.push_back(0);
    } else if (is_a_letter(x)) {
      auto& e = r.entries.back();
      if (e != 0 && (e > 0) != (x == Letter::a)) return std::nullopt;
      e += sign(x);
    } else {
      return std::nullopt;
    }
  }
  return r;
}

}  // namespace

std::string to_string(WordType t) {
  for (const auto& [type, name] : kTypeNames) {
    if (type == t) return name;
  }
  return "?";
}

std::optional<WordType> word_type_from_string(std::string_view s) {
  for (const auto& [type, name] : kTypeNames) {
    if (s == name) return type;
  }
  return std::nullopt;
}

std::optional<WordType> classify_type(const Word& w) {
  std::string shape;  // one character per block of equal t-letters
  for (Letter x : w) {
    if (!is_t_letter(x)) continue;
    char c = x == Letter::t ? 'P' : 'N';
    if (shape.empty() || shape.back() != c) shape.push_back(c);
  }
  std::int64_t n = t_exponent(w);
  if (shape.empty()) {
    for (Letter x : w) {
      if (x != w.front()) return std::nullopt;
    }
    return WordType::E;
  }
  if (shape == "N") return WordType::N;
  if (shape == "P") return WordType::P;
  if (shape == "PN") return n == 0 ? WordType::X : n < 0 ? WordType::XN : WordType::PX;
  if (shape == "NP") return n <= 0 ? WordType::NP_le : WordType::NP_gt;
  if (shape == "PNP" && n <= 0) return WordType::XNP;
  if (shape == "NPN" && n > 0) return WordType::NPX;
  return std::nullopt;
}

RunForm encode_run(const Word& w) {
  bool has_T = false, has_t = false, has_a = false;
  for (Letter x : w) {
    has_T |= x == Letter::T;
    has_t |= x == Letter::t;
    has_a |= is_a_letter(x);
  }
  if (!has_T && !has_a) {
    return RunForm{static_cast<std::int64_t>(w.size()), RunDirection::N, {0}, 0};
  }
  if (has_T) {
    if (auto r = parse_run(w, Letter::t, Letter::T, RunDirection::N)) return *r;
  }
  if (has_t || !has_T) {
    if (auto r = parse_run(w, Letter::T, Letter::t, RunDirection::P)) return *r;
  }
  throw RunFormatError("not a single-run word: " + to_string(w));
}

Word decode_run(const RunForm& r) {
  Word w;
  append_power(w, Letter::t, r.pre_t);
  Letter sep = r.dir == RunDirection::N ? Letter::T : Letter::t;
  // Empty entries decode like the single entry 0.
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    if (i > 0) w.push_back(sep);
    append_power(w, Letter::a, r.entries[i]);
  }
  append_power(w, Letter::t, r.post_t);
  return w;
}

Word push_one_run(const Word& w) {
  auto type = classify_type(w);
  if (!type) throw RunFormatError("word has none of the ten types: " + to_string(w));

  // Positions p = 0..T sit between consecutive t-letters; height[p] is the
  // t-exponent of the prefix ending there.
  std::vector<Letter> ts;
  std::vector<std::int64_t> height{0};
  std::map<std::int64_t, std::int64_t> level_sum;
  for (Letter x : w) {
    if (is_t_letter(x)) {
      ts.push_back(x);
      height.push_back(height.back() + sign(x));
    } else {
      level_sum[height.back()] += sign(x);
    }
  }
  if (ts.empty()) return power(Letter::a, level_sum[0]);

  Letter main = main_direction(*type) == RunDirection::N ? Letter::T : Letter::t;
  std::size_t first = 0;
  while (first < ts.size() && ts[first] != main) ++first;
  std::size_t last = first;
  while (last < ts.size() && ts[last] == main) ++last;
  // Monotone stretch covers positions first..last; every level carrying
  // a-letters lies on it for typed words.
  std::vector<std::int64_t> at(height.size(), 0);
  for (auto [h, c] : level_sum) {
    if (c == 0) continue;
    bool placed = false;
    for (std::size_t p = first; p <= last; ++p) {
      if (height[p] == h) {
        at[p] = c;
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("level off the main stretch in " + to_string(w));
  }
  Word out;
  for (std::size_t p = 0; p < height.size(); ++p) {
    append_power(out, Letter::a, at[p]);
    if (p < ts.size()) out.push_back(ts[p]);
  }
  return out;
}

RunForm apply_no11(RunForm r) {
  auto& e = r.entries;
  std::size_t n = e.size();
  if (n < 3) return r;
  if (r.dir == RunDirection::N) {
    for (std::size_t j = n - 1; j >= 2; --j) {
      if (e[j - 1] == 1 && e[j] == 1) {
        e[j - 2] += 1, e[j - 1] = 0, e[j] = -1;
      } else if (e[j - 1] == -1 && e[j] == -1) {
        e[j - 2] -= 1, e[j - 1] = 0, e[j] = 1;
      }
    }
  } else {
    for (std::size_t j = 0; j + 2 < n; ++j) {
      if (e[j] == 1 && e[j + 1] == 1) {
        e[j] = -1, e[j + 1] = 0, e[j + 2] += 1;
      } else if (e[j] == -1 && e[j + 1] == -1) {
        e[j] = 1, e[j + 1] = 0, e[j + 2] -= 1;
      }
    }
  }
  return r;
}

std::string format_entries(const std::vector<std::int64_t>& entries) {
  std::string s;
  for (auto e : entries) {
    if (e < 0 || e > 9) {
      s += "(" + std::to_string(e) + ")";
    } else {
      s += std::to_string(e);
    }
  }
  return s;
}

std::vector<Violation> run_violations(const RunForm& r, WordType context) {
  std::vector<Violation> out;
  std::vector<std::int64_t> e = r.entries.empty() ? std::vector<std::int64_t>{0} : r.entries;
  std::size_t n = e.size();

  if (context == WordType::E) {
    if (n > 1) out.push_back({ViolationKind::direction, 0, "type E has no t-letters"});
    if (std::abs(e[0]) > 3) out.push_back({ViolationKind::too_large, 0, "a-power above 3"});
    return out;
  }
  if (r.dir != main_direction(context)) {
    out.push_back({ViolationKind::direction, 0,
                   std::string("type ") + to_string(context) + " needs an " +
                       (main_direction(context) == RunDirection::N ? "N" : "P") + "-run"});
  }
  // The privileged end: first entry of an N-run, last entry of a P-run.
  bool is_n = r.dir == RunDirection::N;
  std::size_t priv = is_n ? 0 : n - 1;
  auto near_priv_pair = [&](std::size_t i) {  // pair (i, i+1)
    return is_n ? i == 0 : i + 2 == n;
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(e[i]) >= 6) {
      out.push_back({ViolationKind::too_large, i, "entry " + std::to_string(e[i]) + " has |i| >= 6"});
    } else if (std::abs(e[i]) >= 2 && i != priv) {
      out.push_back({ViolationKind::large_off_end, i,
                     "entry " + std::to_string(e[i]) + " away from the privileged end"});
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (e[i] * e[i + 1] == -1) {
      out.push_back({ViolationKind::opposite_pair, i, format_entries({e[i], e[i + 1]}) + " adjacency"});
    } else if (e[i] * e[i + 1] == 1 && !near_priv_pair(i)) {
      out.push_back({ViolationKind::double_one, i, format_entries({e[i], e[i + 1]}) + " adjacency"});
    }
  }
  if (n >= 3) {
    const auto& tables = builtin_nf_tables();
    const std::set<Pattern>* allowed = nullptr;
    const char* what = is_n ? "prefix" : "suffix";
    switch (context) {
      case WordType::X:
      case WordType::XN:
      case WordType::XNP: allowed = &tables.prefix_x; break;
      case WordType::N:
      case WordType::NP_le: allowed = &tables.prefix_n; break;
      case WordType::P:
      case WordType::NP_gt: allowed = &tables.suffix_p; break;
      default: allowed = &tables.suffix_px; break;
    }
    std::size_t start = is_n ? 0 : n - 3;
    std::vector<std::int64_t> three(e.begin() + static_cast<std::ptrdiff_t>(start),
                                    e.begin() + static_cast<std::ptrdiff_t>(start + 3));
    bool small = std::all_of(three.begin(), three.end(), [](auto x) { return std::abs(x) <= 9; });
    Pattern p{};
    if (small) p = {static_cast<int>(three[0]), static_cast<int>(three[1]), static_cast<int>(three[2])};
    if (r.dir == main_direction(context) && (!small || !allowed->count(p))) {
      out.push_back({ViolationKind::prefix_suffix, start,
                     std::string(what) + " " + format_entries(three) + " forbidden"});
    }
  }
  return out;
}

nlohmann::json to_json(const RunForm& r) {
  return {{"pre_t", r.pre_t},
          {"dir", r.dir == RunDirection::N ? "N" : "P"},
          {"entries", r.entries},
          {"post_t", r.post_t}};
}

RunForm run_form_from_json(const nlohmann::json& j) {
  RunForm r;
  r.pre_t = j.value("pre_t", std::int64_t{0});
  std::string dir = j.at("dir").get<std::string>();
  if (dir != "N" && dir != "P") throw RunFormatError("dir must be N or P");
  r.dir = dir == "N" ? RunDirection::N : RunDirection::P;
  r.entries = j.at("entries").get<std::vector<std::int64_t>>();
  r.post_t = j.value("post_t", std::int64_t{0});
  return r;
}

}  // namespace bs12
