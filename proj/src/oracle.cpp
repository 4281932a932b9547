#include "bs12/oracle.hpp"

#include <algorithm>
#include <ostream>

namespace bs12 {

namespace {
constexpr Letter kLetters[] = {Letter::a, Letter::A, Letter::t, Letter::T};
}

std::optional<std::size_t> Ball::distance(const GroupElement& g) const {
  auto it = distance_.find(g);
  if (it == distance_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Ball::sphere_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& layer : layers_) out.push_back(layer.size());
  return out;
}

Ball bfs_ball(std::size_t radius, std::size_t cap) {
  if (radius > cap) {
    throw std::invalid_argument("radius " + std::to_string(radius) + " exceeds the cap " + std::to_string(cap));
  }
  Ball ball;
  ball.layers_.push_back({GroupElement::identity()});
  ball.distance_.emplace(GroupElement::identity(), 0);
  for (std::size_t d = 1; d <= radius; ++d) {
    std::vector<GroupElement> next;
    for (const auto& g : ball.layers_.back()) {
      for (Letter x : kLetters) {
        GroupElement h = g;
        h.apply(x);
        if (ball.distance_.emplace(h, d).second) next.push_back(std::move(h));
      }
    }
    ball.layers_.push_back(std::move(next));
  }
  return ball;
}

bool is_geodesic(const Word& w, const Ball& ball) {
  if (w.size() > ball.radius()) {
    throw OutOfBall("word longer than the ball radius: " + to_string(w));
  }
  auto d = ball.distance(eval_word(w));
  return d && *d == w.size();
}

std::set<Word, ShortlexLess> all_geodesics(const GroupElement& g, const Ball& ball) {
  auto d = ball.distance(g);
  if (!d) throw OutOfBall("element outside the ball: " + to_string(g));
  // Walk back from g: the last letter x of a geodesic satisfies
  // dist(g x^-1) = dist(g) - 1.
  std::set<Word, ShortlexLess> out;
  Word suffix;
  auto rec = [&](auto&& self, const GroupElement& h, std::size_t dist) -> void {
    if (dist == 0) {
      out.insert(Word(suffix.rbegin(), suffix.rend()));
      return;
    }
    for (Letter x : kLetters) {
      GroupElement prev = h;
      prev.apply(inverse(x));
      auto pd = ball.distance(prev);
      if (pd && *pd + 1 == dist) {
        suffix.push_back(x);
        self(self, prev, dist - 1);
        suffix.pop_back();
      }
    }
  };
  rec(rec, g, *d);
  return out;
}

std::vector<std::size_t> sphere_sizes(std::size_t radius, std::size_t cap) {
  return bfs_ball(radius, cap).sphere_sizes();
}

void write_ball(const Ball& ball, std::ostream& out) {
  for (std::size_t d = 0; d < ball.layers().size(); ++d) {
    std::vector<GroupElement> layer = ball.layers()[d];
    std::sort(layer.begin(), layer.end());
    for (const auto& g : layer) {
      out << g.num() << " " << g.dexp() << " " << g.texp() << " " << d << "\n";
    }
  }
}

}  // namespace bs12
