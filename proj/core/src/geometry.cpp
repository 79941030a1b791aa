#include "disctiler/geometry.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <utility>

#include "disctiler/intersect.hpp"

namespace disctiler {

namespace {

std::string str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

namespace detail {
std::string str_point(Point p) {
  return "(" + str(p.x) + ", " + str(p.y) + ")";
}
}  // namespace detail

Point Point::normalized() const {
  const double n = norm();
  if (n == 0.0) throw Error("cannot normalize zero vector");
  return {x / n, y / n};
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) a += kTwoPi;
  if (a > kPi) a -= kTwoPi;
  return a;
}

double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

// ---------------------------------------------------------------- Isometry

Isometry Isometry::make(bool reflect, double rotation, Point translation) {
  Isometry g;
  g.reflect_ = reflect;
  g.rotation_ = wrap_angle(rotation);
  g.translation_ = translation;
  return g;
}

Isometry Isometry::rotation(double angle, Point about) {
  // p -> R(p - c) + c, i.e. translation = c - R c
  Isometry g;
  g.rotation_ = wrap_angle(angle);
  const double c = std::cos(g.rotation_), s = std::sin(g.rotation_);
  g.translation_ = {about.x - (c * about.x - s * about.y),
                    about.y - (s * about.x + c * about.y)};
  return g;
}

Isometry Isometry::translation(Point v) {
  Isometry g;
  g.translation_ = v;
  return g;
}

Isometry Isometry::reflection(Point on_line, double line_angle) {
  // p -> R(2a) mirror_x (p - q) + q  for a line through q at angle a
  Isometry g;
  g.reflect_ = true;
  g.rotation_ = wrap_angle(2.0 * line_angle);
  g.translation_ = on_line - g.linear(on_line);
  return g;
}

Isometry Isometry::point_reflection(Point about) {
  return rotation(kPi, about);
}

Point Isometry::linear(Point v) const {
  if (reflect_) v.y = -v.y;
  const double c = std::cos(rotation_), s = std::sin(rotation_);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

Point Isometry::operator()(Point p) const { return linear(p) + translation_; }

Isometry operator*(const Isometry& a, const Isometry& b) {
  // a(b(p)) = R_a S_a (R_b S_b p + t_b) + t_a
  Isometry g;
  g.reflect_ = a.reflect_ != b.reflect_;
  g.rotation_ = wrap_angle(a.rotation_ +
                           (a.reflect_ ? -b.rotation_ : b.rotation_));
  g.translation_ = a.linear(b.translation_) + a.translation_;
  return g;
}

Isometry Isometry::inverse() const {
  Isometry g;
  g.reflect_ = reflect_;
  g.rotation_ = wrap_angle(reflect_ ? rotation_ : -rotation_);
  g.translation_ = -g.linear(translation_);
  return g;
}

bool Isometry::is_identity(double eps) const {
  return !reflect_ && std::abs(rotation_) <= eps &&
         translation_.norm() <= eps;
}

// -------------------------------------------------------------------- Edge

Edge Edge::segment(Point from, Point to, const Tolerance& tol) {
  if (!from.finite() || !to.finite())
    throw Error("segment endpoints must be finite");
  if (distance(from, to) < tol.len)
    throw Error("degenerate segment: length " + str(distance(from, to)) +
                " below " + str(tol.len));
  return Edge(Segment{from, to});
}

Edge Edge::arc(Point center, double radius, double start_angle, double sweep,
               const Tolerance& tol) {
  if (!center.finite() || !std::isfinite(radius) ||
      !std::isfinite(start_angle) || !std::isfinite(sweep))
    throw Error("arc parameters must be finite");
  if (radius <= 0.0) throw Error("arc radius must be positive");
  if (sweep == 0.0) throw Error("arc sweep must be nonzero");
  if (std::abs(sweep) > kTwoPi + tol.ang)
    throw Error("arc sweep " + str(sweep) + " exceeds a full turn");
  if (radius * std::abs(sweep) < tol.len)
    throw Error("degenerate arc: length " + str(radius * std::abs(sweep)) +
                " below " + str(tol.len));
  return Edge(Arc{center, radius, start_angle,
                  std::clamp(sweep, -kTwoPi, kTwoPi)});
}

Edge Edge::arc_through(Point from, Point to, double radius, bool left,
                       const Tolerance& tol) {
  const double d = distance(from, to);
  if (d < tol.len) throw Error("arc_through: coincident endpoints");
  if (d > 2.0 * radius + tol.len)
    throw Error("arc_through: endpoints farther apart than the diameter");
  const Point u = (to - from) / d;
  const double h2 = radius * radius - 0.25 * d * d;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const Point mid = (from + to) * 0.5;
  // Bulging left means the center sits right of from->to.
  const Point center = left ? mid - u.perp() * h : mid + u.perp() * h;
  const double a0 = (from - center).angle();
  const double a1 = (to - center).angle();
  // The short traversal; with the center on the right the bulge is left
  // and the sweep clockwise (negative), and vice versa.
  double sweep = wrap_angle(a1 - a0);
  if (left && sweep >= kPi - 1e-15) sweep -= kTwoPi;
  return Edge::arc(center, radius, a0, sweep, tol);
}

Point Edge::start() const {
  if (is_arc()) {
    const Arc& a = arc_data();
    return a.center + polar(a.start_angle, a.radius);
  }
  return segment_data().from;
}

Point Edge::end() const {
  if (is_arc()) {
    const Arc& a = arc_data();
    return a.center + polar(a.start_angle + a.sweep, a.radius);
  }
  return segment_data().to;
}

double Edge::length() const {
  if (is_arc()) return arc_data().radius * std::abs(arc_data().sweep);
  return distance(segment_data().from, segment_data().to);
}

Point Edge::point_at(double t) const {
  if (is_arc()) {
    const Arc& a = arc_data();
    return a.center + polar(a.start_angle + t * a.sweep, a.radius);
  }
  const Segment& s = segment_data();
  return s.from + (s.to - s.from) * t;
}

Point Edge::tangent_at(double t) const {
  if (is_arc()) {
    const Arc& a = arc_data();
    const double phi = a.start_angle + t * a.sweep;
    const Point d{-std::sin(phi), std::cos(phi)};
    return a.sweep > 0.0 ? d : -d;
  }
  const Segment& s = segment_data();
  return (s.to - s.from).normalized();
}

Edge Edge::reversed() const {
  if (is_arc()) {
    const Arc& a = arc_data();
    return Edge(Arc{a.center, a.radius, a.start_angle + a.sweep, -a.sweep});
  }
  const Segment& s = segment_data();
  return Edge(Segment{s.to, s.from});
}

Edge Edge::slice(double t0, double t1) const {
  if (!(t0 < t1)) throw Error("slice: empty parameter range");
  if (is_arc()) {
    const Arc& a = arc_data();
    return Edge(Arc{a.center, a.radius, a.start_angle + t0 * a.sweep,
                    (t1 - t0) * a.sweep});
  }
  return Edge(Segment{point_at(t0), point_at(t1)});
}

double Edge::curvature() const {
  if (!is_arc()) return 0.0;
  const Arc& a = arc_data();
  return (a.sweep > 0.0 ? 1.0 : -1.0) / a.radius;
}

double edge_length(const Edge& e) { return e.length(); }

double edge_point_distance(const Edge& e, Point p) {
  if (e.is_arc()) {
    const Arc& a = e.arc_data();
    const Point v = p - a.center;
    const double d = v.norm();
    if (d < 1e-300) return a.radius;
    if (arc_contains_angle(a, v.angle(), 0.0))
      return std::abs(d - a.radius);
    return std::min(distance(p, e.start()), distance(p, e.end()));
  }
  const Segment& s = e.segment_data();
  const Point d = s.to - s.from;
  const double t = std::clamp((p - s.from).dot(d) / d.norm2(), 0.0, 1.0);
  return distance(p, s.from + d * t);
}

bool arc_contains_angle(const Arc& a, double angle, double slack) {
  const double span = std::abs(a.sweep);
  if (span + 2.0 * slack >= kTwoPi) return true;
  const double from = a.sweep > 0.0 ? a.start_angle : a.start_angle + a.sweep;
  const double delta = wrap_positive(angle - from);
  return delta <= span + slack || delta >= kTwoPi - slack;
}

Edge apply_isometry(const Isometry& g, const Edge& e) {
  if (e.is_arc()) {
    const Arc& a = e.arc_data();
    Arc out;
    out.center = g(a.center);
    out.radius = a.radius;
    if (g.reflect()) {
      out.start_angle = g.rotation_angle() - a.start_angle;
      out.sweep = -a.sweep;
    } else {
      out.start_angle = a.start_angle + g.rotation_angle();
      out.sweep = a.sweep;
    }
    return Edge::arc(out.center, out.radius, out.start_angle, out.sweep);
  }
  const Segment& s = e.segment_data();
  return Edge::segment(g(s.from), g(s.to));
}

// ------------------------------------------------------------------- Chain

std::optional<std::string> Chain::invalid_reason(std::span<const Edge> edges,
                                                 bool closed,
                                                 const Tolerance& tol) {
  if (edges.empty()) return "chain has no edges";
  const size_t n = edges.size();
  for (size_t i = 0; i + 1 < n; ++i) {
    if (distance(edges[i].end(), edges[i + 1].start()) > tol.len)
      return "edges " + std::to_string(i) + " and " + std::to_string(i + 1) +
             " do not share an endpoint";
  }
  if (closed && distance(edges[n - 1].end(), edges[0].start()) > tol.len)
    return "closed chain does not return to its start point";

  // Simplicity: non-adjacent edges must be disjoint; adjacent ones may
  // meet only at their shared junction(s).
  const double jslop = std::max(100.0 * tol.len, 1e-10);
  auto near_junction = [&](Point p, size_t i, size_t j) {
    // junction between consecutive edges i -> j
    (void)i;
    return distance(p, edges[j % n].start()) <= jslop;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const bool adj_fwd = (j == i + 1);
      const bool adj_wrap = closed && i == 0 && j == n - 1;
      const EdgeIntersection xs = edge_intersect(edges[i], edges[j], tol);
      if (!xs.overlaps.empty())
        return "edges " + std::to_string(i) + " and " + std::to_string(j) +
               " overlap";
      if (!adj_fwd && !adj_wrap && !xs.points.empty())
        return "edges " + std::to_string(i) + " and " + std::to_string(j) +
               " intersect at " + detail::str_point(xs.points.front());
      for (const Point& p : xs.points) {
        const bool ok = (adj_fwd && near_junction(p, i, j)) ||
                        (adj_wrap && near_junction(p, j, 0)) ||
                        (n == 2 && closed &&
                         (near_junction(p, i, j) || near_junction(p, j, 0)));
        if (!ok)
          return "edges " + std::to_string(i) + " and " + std::to_string(j) +
                 " self-intersect at " + detail::str_point(p);
      }
    }
  }
  return std::nullopt;
}

Chain Chain::make(std::vector<Edge> edges, bool closed, const Tolerance& tol) {
  if (auto why = invalid_reason(edges, closed, tol))
    throw Error("invalid chain: " + *why);
  return unchecked(std::move(edges), closed);
}

Chain Chain::unchecked(std::vector<Edge> edges, bool closed) {
  Chain c;
  c.edges_ = std::move(edges);
  c.closed_ = closed;
  return c;
}

double Chain::length() const {
  double sum = 0.0;
  for (const Edge& e : edges_) sum += e.length();
  return sum;
}

Chain Chain::reversed() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (auto it = edges_.rbegin(); it != edges_.rend(); ++it)
    out.push_back(it->reversed());
  return unchecked(std::move(out), closed_);
}

Chain apply_isometry(const Isometry& g, const Chain& c) {
  std::vector<Edge> out;
  out.reserve(c.size());
  for (const Edge& e : c.edges()) out.push_back(apply_isometry(g, e));
  return Chain::unchecked(std::move(out), c.closed());
}

double signed_area(const Chain& c) {
  if (!c.closed()) throw Error("signed_area: chain is not closed");
  double area = 0.0;
  for (const Edge& e : c.edges()) {
    area += 0.5 * e.start().cross(e.end());
    if (e.is_arc()) {
      const Arc& a = e.arc_data();
      area += 0.5 * a.radius * a.radius * (a.sweep - std::sin(a.sweep));
    }
  }
  return area;
}

double chain_distance(const Chain& c, Point p) {
  double best = std::numeric_limits<double>::infinity();
  for (const Edge& e : c.edges())
    best = std::min(best, edge_point_distance(e, p));
  return best;
}

std::vector<Point> sample_boundary(const Chain& c, int samples_per_edge,
                                   bool arc_extremes) {
  std::vector<Point> pts;
  pts.reserve(c.size() * (samples_per_edge + 4));
  for (const Edge& e : c.edges()) {
    for (int k = 0; k < samples_per_edge; ++k)
      pts.push_back(e.point_at(double(k) / samples_per_edge));
    pts.push_back(e.end());
    if (arc_extremes && e.is_arc()) {
      const Arc& a = e.arc_data();
      for (int q = 0; q < 4; ++q) {
        const double phi = q * kPi / 2.0;
        if (arc_contains_angle(a, phi, 0.0))
          pts.push_back(a.center + polar(phi, a.radius));
      }
    }
  }
  return pts;
}

// ------------------------------------------------------------------ Region

Region Region::make(Chain boundary, const Tolerance& tol) {
  if (!boundary.closed()) throw Error("region boundary must be closed");
  if (auto why = Chain::invalid_reason(boundary.edges(), true, tol))
    throw Error("invalid region boundary: " + *why);
  const double a = signed_area(boundary);
  if (a <= 0.0)
    throw Error("region boundary must be positively oriented (area " +
                str(a) + ")");
  return Region(std::move(boundary));
}

double chain_area(const Region& r) { return signed_area(r.boundary()); }

Region apply_isometry(const Isometry& g, const Region& r) {
  Chain image = apply_isometry(g, r.boundary());
  if (g.reflect()) image = image.reversed();  // keep positive orientation
  return Region::make(std::move(image));
}

// ----------------------------------------------------------------- Spindle

double spindle_arc_angle(Point p, Point q, double radius) {
  const double d = distance(p, q);
  if (d > 2.0 * radius) throw Error("spindle: d(P,Q) exceeds 2r");
  return 2.0 * std::asin(std::min(1.0, d / (2.0 * radius)));
}

Region spindle(Point p, Point q, double radius, const Tolerance& tol) {
  if (radius <= 0.0) throw Error("spindle: radius must be positive");
  const double d = distance(p, q);
  if (d < tol.len)
    throw Error("spindle: coincident points give an empty-interior region");
  if (d > 2.0 * radius + tol.len)
    throw Error("spindle: d(P,Q) = " + str(d) + " exceeds 2r = " +
                str(2.0 * radius));
  const Point u = (q - p) / d;
  const Point mid = (p + q) * 0.5;
  const double h2 = radius * radius - 0.25 * d * d;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const double s = spindle_arc_angle(p, q, radius);

  if (h <= tol.len) {
    // Antipodal on the supporting circle: the spindle is the full disc,
    // represented as two half-sweep arcs.
    const double a0 = (p - mid).angle();
    std::vector<Edge> edges;
    edges.push_back(Edge::arc(mid, radius, a0, kPi, tol));
    edges.push_back(Edge::arc(mid, radius, a0 + kPi, kPi, tol));
    return Region::make(Chain::make(std::move(edges), true, tol), tol);
  }

  const Point c1 = mid + u.perp() * h;  // arc below the chord (p -> q, ccw)
  const Point c2 = mid - u.perp() * h;  // arc above the chord (q -> p, ccw)
  std::vector<Edge> edges;
  edges.push_back(Edge::arc(c1, radius, (p - c1).angle(), s, tol));
  edges.push_back(Edge::arc(c2, radius, (q - c2).angle(), s, tol));
  return Region::make(Chain::make(std::move(edges), true, tol), tol);
}

}  // namespace disctiler
