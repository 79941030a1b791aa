// Planar geometry kernel for chains of circular arcs and line segments
// at unit-disc scale: points, rigid motions, edges, chains, regions,
// areas and spindles.

#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace disctiler {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every tolerance in the library flows from this record; any call that
// compares coordinates, angles or areas accepts an override.
struct Tolerance {
  double len = 1e-9;         // coordinate / length coincidence
  double ang = 1e-9;         // radians
  double area = 1e-7;        // tiling coverage defect
  double congruence = 1e-6;  // congruence verification distance
  double match = 1e-7;       // tile-set matching Hausdorff bound
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  Point operator+(Point o) const { return {x + o.x, y + o.y}; }
  Point operator-(Point o) const { return {x - o.x, y - o.y}; }
  Point operator-() const { return {-x, -y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
  Point operator/(double s) const { return {x / s, y / s}; }

  double dot(Point o) const { return x * o.x + y * o.y; }
  double cross(Point o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }
  double angle() const { return std::atan2(y, x); }
  Point perp() const { return {-y, x}; }  // ccw quarter turn
  Point normalized() const;
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Point operator*(double s, Point p) { return p * s; }
inline double distance(Point a, Point b) { return (a - b).norm(); }
inline Point polar(double angle, double radius = 1.0) {
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

// Wrap to (-pi, pi].
double wrap_angle(double a);
// Wrap to [0, 2*pi).
double wrap_positive(double a);

struct Circle {
  Point center;
  double radius = 0.0;  // >= 0
};

// Planar rigid motion, optionally orientation-reversing.  Acts as
// p -> R(rotation) * mirror_x(p if reflect) + translation.
class Isometry {
 public:
  Isometry() = default;
  static Isometry make(bool reflect, double rotation, Point translation);
  static Isometry rotation(double angle, Point about = {0.0, 0.0});
  static Isometry translation(Point v);
  // Reflection about the line through `on_line` with direction `line_angle`.
  static Isometry reflection(Point on_line, double line_angle);
  static Isometry point_reflection(Point about);

  Point operator()(Point p) const;
  Point linear(Point v) const;  // rotation/reflection part only

  // (a * b)(p) == a(b(p)).
  friend Isometry operator*(const Isometry& a, const Isometry& b);
  Isometry inverse() const;

  bool reflect() const { return reflect_; }
  double rotation_angle() const { return rotation_; }
  Point translation_part() const { return translation_; }
  bool is_identity(double eps = 1e-12) const;

 private:
  bool reflect_ = false;
  double rotation_ = 0.0;  // in (-pi, pi]
  Point translation_{0.0, 0.0};
};

struct Segment {
  Point from;
  Point to;
};

// Directed arc: start point center + radius*unit(start_angle), swept by
// `sweep` radians (positive = counterclockwise).
struct Arc {
  Point center;
  double radius = 0.0;      // > 0
  double start_angle = 0.0;
  double sweep = 0.0;       // nonzero, in (-2*pi, 2*pi]
};

class Edge {
 public:
  static Edge segment(Point from, Point to, const Tolerance& tol = {});
  static Edge arc(Point center, double radius, double start_angle,
                  double sweep, const Tolerance& tol = {});
  // Arc of given radius from `from` to `to`, bulging to the left of
  // from->to when `left` is true; always the shorter of the two arcs.
  static Edge arc_through(Point from, Point to, double radius, bool left,
                          const Tolerance& tol = {});

  bool is_arc() const { return std::holds_alternative<Arc>(rep_); }
  const Arc& arc_data() const { return std::get<Arc>(rep_); }
  const Segment& segment_data() const { return std::get<Segment>(rep_); }

  Point start() const;
  Point end() const;
  double length() const;
  Point point_at(double t) const;    // t in [0, 1]
  Point tangent_at(double t) const;  // unit tangent in traversal direction
  Point midpoint() const { return point_at(0.5); }
  Edge reversed() const;
  // Sub-edge on [t0, t1] of the parameter range; t0 < t1.
  Edge slice(double t0, double t1) const;
  // 0 for segments, sign(sweep)/radius for arcs.
  double curvature() const;

 private:
  explicit Edge(Segment s) : rep_(s) {}
  explicit Edge(Arc a) : rep_(a) {}
  std::variant<Segment, Arc> rep_;
};

double edge_length(const Edge& e);
double edge_point_distance(const Edge& e, Point p);
Edge apply_isometry(const Isometry& g, const Edge& e);

// True when `angle` lies within the arc's swept angular range (with
// `slack` radians of grace at both ends).
bool arc_contains_angle(const Arc& a, double angle, double slack);

class Chain {
 public:
  Chain() = default;
  // Validates endpoint continuity and simplicity; throws Error.
  static Chain make(std::vector<Edge> edges, bool closed,
                    const Tolerance& tol = {});
  // No validation; for inputs whose validity is established elsewhere
  // (isometric images, documents checked later by a validator).
  static Chain unchecked(std::vector<Edge> edges, bool closed);

  std::span<const Edge> edges() const { return edges_; }
  bool closed() const { return closed_; }
  bool empty() const { return edges_.empty(); }
  size_t size() const { return edges_.size(); }
  const Edge& edge(size_t i) const { return edges_[i]; }
  Point start() const { return edges_.front().start(); }
  Point end() const { return edges_.back().end(); }
  double length() const;
  Chain reversed() const;

  // Structural check used by Chain::make and by the tiling validator;
  // returns an explanation for the first violated invariant.
  static std::optional<std::string> invalid_reason(
      std::span<const Edge> edges, bool closed, const Tolerance& tol);

 private:
  std::vector<Edge> edges_;
  bool closed_ = false;
};

Chain apply_isometry(const Isometry& g, const Chain& c);
// Signed area of a closed chain (Green's theorem; arcs contribute the
// chord shoelace term plus the circular-segment correction).
double signed_area(const Chain& c);
double chain_distance(const Chain& c, Point p);

// Boundary sample points: edge endpoints, interior samples, and (for
// arcs) the axis-extreme points of the supporting circle that lie on
// the arc.
std::vector<Point> sample_boundary(const Chain& c, int samples_per_edge,
                                   bool arc_extremes = true);

// Closed, simple, positively oriented chain bounding a Jordan region.
class Region {
 public:
  static Region make(Chain boundary, const Tolerance& tol = {});
  const Chain& boundary() const { return boundary_; }

 private:
  explicit Region(Chain b) : boundary_(std::move(b)) {}
  Chain boundary_;
};

double chain_area(const Region& r);
Region apply_isometry(const Isometry& g, const Region& r);

// The r-spindle of P and Q: intersection of all discs of radius r
// containing both; bounded by the two arcs of radius r through P and Q
// not longer than a half-circle.  Requires 0 < d(P,Q) <= 2r.
Region spindle(Point p, Point q, double radius, const Tolerance& tol = {});
// Central angle of each bounding arc of the spindle: 2*asin(d/(2r)).
double spindle_arc_angle(Point p, Point q, double radius);

namespace detail {
std::string str_point(Point p);
}

}  // namespace disctiler
