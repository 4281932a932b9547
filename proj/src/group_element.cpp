#include "bs12/group_element.hpp"

#include <boost/container_hash/hash.hpp>
#include <stdexcept>

namespace bs12 {

GroupElement::GroupElement(BigInt num, std::uint64_t dexp, std::int64_t texp)
    : num_(std::move(num)), dexp_(dexp), texp_(texp) {
  canonicalize();
}

GroupElement GroupElement::generator(Letter x) {
  switch (x) {
    case Letter::a: return {1, 0, 0};
    case Letter::A: return {-1, 0, 0};
    case Letter::t: return {0, 0, 1};
    case Letter::T: return {0, 0, -1};
  }
  return {};
}

void GroupElement::canonicalize() {
  if (num_ == 0) {
    dexp_ = 0;
    return;
  }
  if (dexp_ == 0) return;
  std::uint64_t z = boost::multiprecision::lsb(boost::multiprecision::abs(num_));
  std::uint64_t s = std::min(z, dexp_);
  if (s > 0) {
    num_ >>= s;  // exact: the low s bits are zero, so sign is preserved
    dexp_ -= s;
  }
}

void GroupElement::add_power_of_two(std::int64_t e, int sign) {
  // num/2^dexp + sign 2^e
  std::int64_t shift = e + static_cast<std::int64_t>(dexp_);
  if (shift >= 0) {
    BigInt term = BigInt(1) << static_cast<unsigned>(shift);
    if (sign > 0) num_ += term; else num_ -= term;
  } else {
    // 2^e has a larger denominator than the current value.
    num_ <<= static_cast<unsigned>(-shift);
    dexp_ += static_cast<std::uint64_t>(-shift);
    if (sign > 0) num_ += 1; else num_ -= 1;
  }
  canonicalize();
}

GroupElement& GroupElement::apply(Letter x) {
  switch (x) {
    case Letter::a: add_power_of_two(texp_, 1); break;
    case Letter::A: add_power_of_two(texp_, -1); break;
    case Letter::t: ++texp_; break;
    case Letter::T: --texp_; break;
  }
  return *this;
}

GroupElement GroupElement::operator*(const GroupElement& h) const {
  // q + 2^texp * h.q, brought to a common denominator 2^D.
  std::int64_t hshift = texp_ - static_cast<std::int64_t>(h.dexp_);  // h.q * 2^texp = h.num * 2^hshift
  std::int64_t D = std::max<std::int64_t>(static_cast<std::int64_t>(dexp_), -hshift);
  if (D < 0) D = 0;
  BigInt a = num_ << static_cast<unsigned>(D - static_cast<std::int64_t>(dexp_));
  BigInt b = h.num_ << static_cast<unsigned>(D + hshift);
  return GroupElement(a + b, static_cast<std::uint64_t>(D), texp_ + h.texp_);
}

GroupElement GroupElement::inverse() const {
  // (q, n)^-1 = (-2^-n q, -n)
  std::int64_t e = static_cast<std::int64_t>(dexp_) + texp_;  // -2^-n q = -num / 2^(dexp+n)
  if (e >= 0) return GroupElement(-num_, static_cast<std::uint64_t>(e), -texp_);
  return GroupElement(BigInt(-num_) << static_cast<unsigned>(-e), 0, -texp_);
}

bool operator<(const GroupElement& g, const GroupElement& h) {
  if (g.texp_ != h.texp_) return g.texp_ < h.texp_;
  if (g.dexp_ != h.dexp_) return g.dexp_ < h.dexp_;
  return g.num_ < h.num_;
}

std::size_t GroupElement::hash() const {
  std::size_t seed = boost::multiprecision::hash_value(num_);
  boost::hash_combine(seed, dexp_);
  boost::hash_combine(seed, texp_);
  return seed;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) { return g * h; }
GroupElement inverse(const GroupElement& g) { return g.inverse(); }

GroupElement eval_word(const Word& w) {
  GroupElement g;
  for (Letter x : w) g.apply(x);
  return g;
}

BigInt x_word_value(const BigInt& j, std::span<const std::int64_t> entries) {
  BigInt n = j;
  for (std::size_t i = entries.size(); i-- > 0;) n = 2 * n + entries[i];
  return n;
}

std::string to_string(const GroupElement& g) {
  std::string s = g.num().str();
  if (g.dexp() > 0) s += "/2^" + std::to_string(g.dexp());
  return "(" + s + ", " + std::to_string(g.texp()) + ")";
}

nlohmann::json to_json(const GroupElement& g) {
  return {{"num", g.num().str()}, {"dexp", g.dexp()}, {"texp", g.texp()}};
}

GroupElement group_element_from_json(const nlohmann::json& j) {
  const auto& num = j.at("num");
  BigInt n = num.is_string() ? BigInt(num.get<std::string>()) : BigInt(num.get<std::int64_t>());
  std::int64_t d = j.at("dexp").get<std::int64_t>();
  if (d < 0) throw std::invalid_argument("dexp must be non-negative");
  return GroupElement(std::move(n), static_cast<std::uint64_t>(d), j.at("texp").get<std::int64_t>());
}

}  // namespace bs12
