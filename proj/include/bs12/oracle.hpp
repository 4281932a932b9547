#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "bs12/group_element.hpp"
#include "bs12/word.hpp"

namespace bs12 {

inline constexpr std::size_t kDefaultBallCap = 14;

class OutOfBall : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// The ball of the given radius in the Cayley graph with generators a, A, t, T,
// with exact word-metric distances. Immutable once built.
class Ball {
 public:
  std::size_t radius() const { return layers_.size() - 1; }
  std::size_t size() const { return distance_.size(); }
  std::optional<std::size_t> distance(const GroupElement& g) const;
  bool contains(const GroupElement& g) const { return distance_.count(g) > 0; }
  // layers()[d]: elements at distance d, in discovery order.
  const std::vector<std::vector<GroupElement>>& layers() const { return layers_; }
  std::vector<std::size_t> sphere_sizes() const;

 private:
  friend Ball bfs_ball(std::size_t radius, std::size_t cap);
  std::unordered_map<GroupElement, std::size_t, GroupElementHash> distance_;
  std::vector<std::vector<GroupElement>> layers_;
};

// Breadth-first search from the identity; throws std::invalid_argument when
// radius exceeds cap.
Ball bfs_ball(std::size_t radius, std::size_t cap = kDefaultBallCap);

// |w| equals the distance of eval(w). Throws OutOfBall when |w| > radius.
bool is_geodesic(const Word& w, const Ball& ball);

// Every word of length distance(g) that evaluates to g, sorted shortlex.
std::set<Word, ShortlexLess> all_geodesics(const GroupElement& g, const Ball& ball);

std::vector<std::size_t> sphere_sizes(std::size_t radius, std::size_t cap = kDefaultBallCap);

// One line per element, sorted by (distance, element): "num dexp texp distance".
void write_ball(const Ball& ball, std::ostream& out);

}  // namespace bs12
