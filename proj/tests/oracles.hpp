// Reference implementations used only by the tests. They take a different
// route from the library: affine maps x -> 2^n x + q over the rationals
// instead of the canonical dyadic triple.
#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bs12/group_element.hpp"
#include "bs12/strings.hpp"
#include "bs12/word.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// a acts as x -> x + 1, t as x -> 2x; a word acts by composing left to right
// in the matrix sense, i.e. the element is the map M_w = M_x1 ... M_xn.
struct Affine {
  Rational scale = 1;  // 2^n
  Rational shift = 0;  // q
  long texp = 0;
};

inline Affine compose(const Affine& f, const Affine& g) {
  // [[f.s, f.q],[0,1]] * [[g.s, g.q],[0,1]]
  return {f.scale * g.scale, f.scale * g.shift + f.shift, f.texp + g.texp};
}

inline Affine letter(bs12::Letter x) {
  switch (x) {
    case bs12::Letter::a: return {1, 1, 0};
    case bs12::Letter::A: return {1, -1, 0};
    case bs12::Letter::t: return {2, 0, 1};
    case bs12::Letter::T: return {Rational(1, 2), 0, -1};
  }
  return {};
}

inline Affine eval(const bs12::Word& w) {
  Affine m;
  for (auto x : w) m = compose(m, letter(x));
  return m;
}

inline bool same(const Affine& m, const bs12::GroupElement& g) {
  Rational q(g.num(), boost::multiprecision::cpp_int(1) << static_cast<unsigned>(g.dexp()));
  return m.shift == q && m.texp == g.texp();
}

inline std::vector<bs12::Word> all_words(std::size_t max_len) {
  std::vector<bs12::Word> out;
  bs12::for_each_string("aAtT", max_len, [&](const std::string& s) { out.push_back(bs12::from_symbols(s)); });
  return out;
}

inline std::vector<bs12::Word> reduced_words(std::size_t max_len) {
  std::vector<bs12::Word> out;
  for (auto& w : all_words(max_len)) {
    if (bs12::free_reduce(w) == w) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace oracle
