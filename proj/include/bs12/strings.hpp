#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bs12 {

// Calls f on every string over `alphabet` of length <= max_len, shorter
// first, each length in lexicographic order of alphabet positions.
template <class F>
void for_each_string(std::string_view alphabet, std::size_t max_len, F&& f) {
  const std::string empty;
  f(empty);
  if (alphabet.empty()) return;
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::string cur(len, alphabet[0]);
    std::vector<std::size_t> idx(len, 0);
    bool more = true;
    while (more) {
      f(std::as_const(cur));
      more = false;
      for (std::size_t i = len; i-- > 0;) {
        if (++idx[i] < alphabet.size()) {
          cur[i] = alphabet[idx[i]];
          more = true;
          break;
        }
        idx[i] = 0;
        cur[i] = alphabet[0];
      }
    }
  }
}

}  // namespace bs12
