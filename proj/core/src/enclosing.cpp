#include "disctiler/enclosing.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace disctiler {

namespace {

constexpr double kInflate = 1e-12;

bool inside(const Circle& c, Point p) {
  return distance(c.center, p) <= c.radius + kInflate * (1.0 + c.radius);
}

Circle from_two(Point a, Point b) {
  return {(a + b) * 0.5, 0.5 * distance(a, b)};
}

Circle from_three(Point a, Point b, Point c) {
  const Point u = b - a, v = c - a;
  const double den = 2.0 * u.cross(v);
  const double scale = std::max(u.norm(), v.norm());
  if (std::abs(den) < 1e-14 * scale * scale) {
    // Collinear: the diametral circle of the farthest pair.
    Circle best = from_two(a, b);
    for (const Circle& cand : {from_two(a, c), from_two(b, c)})
      if (cand.radius > best.radius) best = cand;
    return best;
  }
  const double u2 = u.norm2(), v2 = v.norm2();
  const Point center = a + Point{v.y * u2 - u.y * v2, u.x * v2 - v.x * u2} / den;
  return {center, distance(center, a)};
}

}  // namespace

// Iterative Welzl (move-to-front form): grow the circle point by point,
// re-solving with the offending point pinned to the boundary.
Circle min_enclosing_circle(std::span<const Point> points) {
  if (points.empty())
    throw Error("min_enclosing_circle: empty point set");
  std::vector<Point> pts(points.begin(), points.end());
  // The result is unique regardless of processing order; shuffling only
  // bounds the expected cost.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::shuffle(pts.begin(), pts.end(), rng);

  Circle c{pts[0], 0.0};
  for (size_t i = 1; i < pts.size(); ++i) {
    if (inside(c, pts[i])) continue;
    c = {pts[i], 0.0};
    for (size_t j = 0; j < i; ++j) {
      if (inside(c, pts[j])) continue;
      c = from_two(pts[i], pts[j]);
      for (size_t k = 0; k < j; ++k) {
        if (inside(c, pts[k])) continue;
        c = from_three(pts[i], pts[j], pts[k]);
      }
    }
  }
  return c;
}

Circle region_circumcircle(const Region& r, int samples_per_edge) {
  const std::vector<Point> pts =
      sample_boundary(r.boundary(), std::max(1, samples_per_edge), true);
  return min_enclosing_circle(pts);
}

}  // namespace disctiler
