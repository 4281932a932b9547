#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bs12/group_element.hpp"
#include "bs12/word.hpp"

namespace bs12 {

// The five shape families of normal forms:
//   E   epsilon, a^{+-1}, a^{+-2}, a^{+-3}
//   X   t^k [N-run] t^m,   k >= 1          (types X, XN, XNP)
//   N   [N-run] t^k,       0 <= k <= l     (types N, NP<=)
//   P   t^-k [P-run],      0 <= k < l      (types P, NP>)
//   PX  t^-k [P-run] t^-m, m >= 1, k+m < l (types PX, NPX)
// where l is the number of t-letters inside the run.
enum class NfFamily { E, X, N, P, PX };

std::string to_string(NfFamily f);

std::optional<NfFamily> nf_family(const Word& w);
bool is_normal_form(const Word& w);

// The unique normal form of g. Throws std::logic_error if the candidate search
// does not end with exactly one word, which would be a bug.
Word nf_of_element(const GroupElement& g);
Word normalize(const Word& w);
std::size_t geodesic_length(const GroupElement& g);

// All normal forms of length <= max_len, built from the family shapes and
// sorted shortlex.
std::vector<Word> enumerate_nf(std::size_t max_len);

}  // namespace bs12
