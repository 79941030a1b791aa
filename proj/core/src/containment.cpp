#include "disctiler/containment.hpp"

#include <cmath>

namespace disctiler {

namespace {

struct RayHits {
  int crossings = 0;
  bool degenerate = false;  // grazed an endpoint or tangency: redraw
};

// Hits of the ray p + t*u (t > 0) against one edge.  Marks the cast
// degenerate when a hit falls near an edge endpoint or a tangency.
void cast_edge(Point p, Point u, const Edge& e, double graze, RayHits& out) {
  if (!e.is_arc()) {
    const Segment& s = e.segment_data();
    const Point d = s.to - s.from;
    const double den = u.cross(d);
    const double len = d.norm();
    if (std::abs(den) < 1e-12 * len) {
      // Parallel; degenerate only if the supporting line grazes the ray.
      if (std::abs((s.from - p).cross(u)) <= graze) out.degenerate = true;
      return;
    }
    const Point w = s.from - p;
    const double t = w.cross(d) / den;
    const double m = w.cross(u) / den;
    if (t <= 0.0) return;
    if (m < -graze / len || m > 1.0 + graze / len) return;
    if (m < graze / len || m > 1.0 - graze / len) {
      out.degenerate = true;
      return;
    }
    ++out.crossings;
    return;
  }
  const Arc& a = e.arc_data();
  const Point w = p - a.center;
  const double b = w.dot(u);
  const double q = w.norm2() - a.radius * a.radius;
  const double disc = b * b - q;
  if (disc <= 0.0) {
    if (disc > -graze * graze) out.degenerate = true;  // near tangency
    return;
  }
  const double root = std::sqrt(disc);
  if (root <= graze) {
    out.degenerate = true;
    return;
  }
  const double ang_graze = graze / a.radius;
  for (const double t : {-b - root, -b + root}) {
    if (t <= 0.0) continue;
    const Point hit = p + u * t;
    const double phi = (hit - a.center).angle();
    const double rel = a.sweep > 0.0 ? wrap_positive(phi - a.start_angle)
                                     : wrap_positive(a.start_angle - phi);
    const double span = std::abs(a.sweep);
    const bool inside = rel <= span;
    const bool near_end = rel <= ang_graze || std::abs(rel - span) <= ang_graze ||
                          rel >= kTwoPi - ang_graze;
    if (near_end) {
      out.degenerate = true;
      return;
    }
    if (inside) ++out.crossings;
  }
}

}  // namespace

Side point_in_region(const Region& r, Point p, const Tolerance& tol,
                     std::optional<double> ray_angle) {
  if (chain_distance(r.boundary(), p) <= tol.len) return Side::Boundary;

  const double graze = std::max(1e3 * tol.len, 1e-9);
  const double base = ray_angle.value_or(0.5574770724);
  // Golden-angle steps give a non-repeating deterministic direction
  // sequence.
  constexpr double kStep = 2.3999632297286533;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Point u = polar(base + attempt * kStep);
    RayHits hits;
    for (const Edge& e : r.boundary().edges()) {
      cast_edge(p, u, e, graze, hits);
      if (hits.degenerate) break;
    }
    if (hits.degenerate) continue;
    return hits.crossings % 2 == 1 ? Side::Inside : Side::Outside;
  }
  throw Error("point_in_region: no non-degenerate ray direction found at " +
              detail::str_point(p));
}

}  // namespace disctiler
