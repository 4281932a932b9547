#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "bs12/word.hpp"

namespace bs12 {

using BigInt = boost::multiprecision::cpp_int;

// An element of Z[1/2] x| Z, the pair (num / 2^dexp, texp), with product
// (q1, n1)(q2, n2) = (q1 + 2^n1 q2, n1 + n2). The generator a is (1, 0) and t
// is (0, 1). Values are always kept canonical: dexp == 0 or num is odd.
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(BigInt num, std::uint64_t dexp, std::int64_t texp);

  static GroupElement identity() { return {}; }
  static GroupElement generator(Letter x);
  static GroupElement a_power(const BigInt& n) { return {n, 0, 0}; }

  const BigInt& num() const { return num_; }
  std::uint64_t dexp() const { return dexp_; }
  std::int64_t texp() const { return texp_; }

  bool is_identity() const { return num_ == 0 && texp_ == 0; }

  // Right multiplication by a single generator; cheaper than operator*.
  GroupElement& apply(Letter x);

  GroupElement operator*(const GroupElement& h) const;
  GroupElement inverse() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Arbitrary but fixed total order (texp, dexp, num), for sorted output.
  friend bool operator<(const GroupElement& g, const GroupElement& h);

  std::size_t hash() const;

 private:
  void canonicalize();
  // Adds 2^e to the dyadic part, e may be negative.
  void add_power_of_two(std::int64_t e, int sign);

  BigInt num_ = 0;
  std::uint64_t dexp_ = 0;
  std::int64_t texp_ = 0;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
GroupElement eval_word(const Word& w);

// The integer N with t^k a^j t^-1 a^e_{k-1} ... t^-1 a^e_0 = a^N, namely
// 2^k j + sum 2^i e_i. entries = (e_0, ..., e_{k-1}).
BigInt x_word_value(const BigInt& j, std::span<const std::int64_t> entries);

std::string to_string(const GroupElement& g);  // "num/2^dexp, texp" style, for humans
nlohmann::json to_json(const GroupElement& g);
GroupElement group_element_from_json(const nlohmann::json& j);

}  // namespace bs12

template <>
struct std::hash<bs12::GroupElement> {
  std::size_t operator()(const bs12::GroupElement& g) const { return g.hash(); }
};
