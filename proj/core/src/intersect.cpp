#include "disctiler/intersect.hpp"

#include <algorithm>
#include <cmath>

namespace disctiler {

namespace {

// Angular parameter of `angle` along the arc, in [0, 1], or nullopt when
// the angle is outside the swept range (with slack).
std::optional<double> arc_param(const Arc& a, double angle, double slack) {
  const double rel = a.sweep > 0.0 ? wrap_positive(angle - a.start_angle)
                                   : wrap_positive(a.start_angle - angle);
  const double span = std::abs(a.sweep);
  if (rel <= span + slack) return std::min(rel, span) / span;
  if (rel >= kTwoPi - slack) return 0.0;
  return std::nullopt;
}

void add_point(EdgeIntersection& out, Point p, double merge_tol) {
  for (const Point& q : out.points)
    if (distance(p, q) <= merge_tol) return;
  out.points.push_back(p);
}

void seg_seg(const Segment& a, const Segment& b, EdgeIntersection& out,
             const Tolerance& tol) {
  const Point da = a.to - a.from;
  const Point db = b.to - b.from;
  const double den = da.cross(db);
  const double scale = std::max(da.norm(), db.norm());
  if (std::abs(den) > 1e-14 * scale * scale) {
    const Point w = b.from - a.from;
    const double t = w.cross(db) / den;
    const double s = w.cross(da) / den;
    const double slack = tol.len / scale;
    if (t >= -slack && t <= 1.0 + slack && s >= -slack && s <= 1.0 + slack)
      add_point(out, a.from + da * std::clamp(t, 0.0, 1.0), tol.len);
    return;
  }
  // Parallel: collinear within tolerance?
  const Point u = da / da.norm();
  if (std::abs((b.from - a.from).cross(u)) > tol.len ||
      std::abs((b.to - a.from).cross(u)) > tol.len)
    return;
  const double la = da.norm();
  double s0 = (b.from - a.from).dot(u) / la;
  double s1 = (b.to - a.from).dot(u) / la;
  if (s0 > s1) std::swap(s0, s1);
  const double lo = std::max(0.0, s0), hi = std::min(1.0, s1);
  if (hi < lo - tol.len / la) return;
  if ((hi - lo) * la <= tol.len) {
    add_point(out, a.from + da * std::clamp(0.5 * (lo + hi), 0.0, 1.0),
              tol.len);
  } else {
    out.overlaps.push_back(
        Edge::segment(a.from + da * lo, a.from + da * hi, tol));
  }
}

void seg_arc(const Segment& s, const Arc& c, bool swapped,
             EdgeIntersection& out, const Tolerance& tol) {
  (void)swapped;
  const Point d = s.to - s.from;
  const double len = d.norm();
  const Point u = d / len;
  const Point w = s.from - c.center;
  // |w + t*u*len|^2 = r^2
  const double b = w.dot(u);
  const double q = w.norm2() - c.radius * c.radius;
  double disc = b * b - q;
  if (disc < 0.0) {
    // Allow grazing tangency within tolerance.
    if (disc < -2.0 * c.radius * tol.len) return;
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  const double slack = tol.len / len;
  const double ang_slack = tol.len / c.radius;
  for (const double dist : disc == 0.0 ? std::vector<double>{-b}
                                       : std::vector<double>{-b - root,
                                                             -b + root}) {
    const double t = dist / len;
    if (t < -slack || t > 1.0 + slack) continue;
    const Point p = s.from + d * std::clamp(t, 0.0, 1.0);
    if (arc_param(c, (p - c.center).angle(), ang_slack))
      add_point(out, p, tol.len);
  }
}

// Overlap of two arcs on (nearly) the same supporting circle.
void arc_arc_coincident(const Arc& a, const Arc& b, EdgeIntersection& out,
                        const Tolerance& tol) {
  // Interval of `a` in its own angular parameterization: [0, |sweep_a|]
  // measured ccw from its low end.
  const double a_from = a.sweep > 0.0 ? a.start_angle : a.start_angle + a.sweep;
  const double b_from = b.sweep > 0.0 ? b.start_angle : b.start_angle + b.sweep;
  const double la = std::abs(a.sweep), lb = std::abs(b.sweep);
  // Position of b's interval start relative to a's.
  const double off = wrap_positive(b_from - a_from);
  const double ang_tol = tol.len / a.radius;

  // b covers [off, off + lb] on the circle (mod 2*pi); intersect with
  // [0, la].  Two candidate windows because of the wrap.
  for (const double shift : {0.0, -kTwoPi}) {
    const double lo = std::max(0.0, off + shift);
    const double hi = std::min(la, off + shift + lb);
    if (hi < lo - ang_tol) continue;
    if (hi - lo <= ang_tol) {
      const double mid = std::clamp(0.5 * (lo + hi), 0.0, la);
      add_point(out, a.center + polar(a_from + mid, a.radius),
                std::max(tol.len, 2.0 * ang_tol * a.radius));
    } else {
      out.overlaps.push_back(a.sweep > 0.0
                                 ? Edge::arc(a.center, a.radius, a_from + lo,
                                             hi - lo, tol)
                                 : Edge::arc(a.center, a.radius, a_from + hi,
                                             lo - hi, tol));
    }
  }
}

void arc_arc(const Arc& a, const Arc& b, EdgeIntersection& out,
             const Tolerance& tol) {
  const Point dc = b.center - a.center;
  const double d = dc.norm();
  if (d <= tol.len && std::abs(a.radius - b.radius) <= tol.len) {
    arc_arc_coincident(a, b, out, tol);
    return;
  }
  if (d > a.radius + b.radius + tol.len) return;
  if (d < std::abs(a.radius - b.radius) - tol.len) return;
  if (d <= tol.len) return;  // concentric, distinct radii

  // Radical-line construction.
  const double t = (d * d + a.radius * a.radius - b.radius * b.radius) /
                   (2.0 * d);
  double h2 = a.radius * a.radius - t * t;
  if (h2 < 0.0) h2 = 0.0;
  const double h = std::sqrt(h2);
  const Point u = dc / d;
  const Point base = a.center + u * t;
  const double sa = tol.len / a.radius;
  const double sb = tol.len / b.radius;
  std::vector<Point> cands;
  if (h <= tol.len) {
    cands.push_back(base);
  } else {
    cands.push_back(base + u.perp() * h);
    cands.push_back(base - u.perp() * h);
  }
  for (const Point& p : cands) {
    if (arc_param(a, (p - a.center).angle(), sa) &&
        arc_param(b, (p - b.center).angle(), sb))
      add_point(out, p, tol.len);
  }
}

}  // namespace

EdgeIntersection edge_intersect(const Edge& a, const Edge& b,
                                const Tolerance& tol) {
  EdgeIntersection out;
  if (!a.is_arc() && !b.is_arc()) {
    seg_seg(a.segment_data(), b.segment_data(), out, tol);
  } else if (!a.is_arc()) {
    seg_arc(a.segment_data(), b.arc_data(), false, out, tol);
  } else if (!b.is_arc()) {
    seg_arc(b.segment_data(), a.arc_data(), true, out, tol);
  } else {
    arc_arc(a.arc_data(), b.arc_data(), out, tol);
  }
  return out;
}

}  // namespace disctiler
