#include "disctiler/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "disctiler/enclosing.hpp"
#include "disctiler/intersect.hpp"
#include "disctiler/signature.hpp"

namespace disctiler {

namespace {

struct Interval {
  double start;   // in [0, 2*pi)
  double length;  // <= 2*pi
};

// Merge ccw angular intervals on S^1, closing gaps up to `gap`.
std::vector<Interval> merge_intervals(std::vector<Interval> iv, double gap) {
  if (iv.empty()) return iv;
  for (Interval& i : iv) {
    i.start = wrap_positive(i.start);
    i.length = std::min(i.length, kTwoPi);
  }
  std::sort(iv.begin(), iv.end(),
            [](const Interval& a, const Interval& b) {
              return a.start < b.start;
            });
  std::vector<Interval> out;
  out.push_back(iv[0]);
  for (size_t i = 1; i < iv.size(); ++i) {
    Interval& cur = out.back();
    if (iv[i].start <= cur.start + cur.length + gap) {
      cur.length = std::max(cur.length, iv[i].start + iv[i].length - cur.start);
    } else {
      out.push_back(iv[i]);
    }
  }
  // Wrap-around merge: the last interval may reach past 2*pi into the first.
  if (out.size() > 1) {
    Interval& first = out.front();
    Interval& last = out.back();
    if (first.start + kTwoPi <= last.start + last.length + gap) {
      last.length = std::max(
          last.length, first.start + first.length + kTwoPi - last.start);
      out.erase(out.begin());
    }
  }
  for (Interval& i : out) i.length = std::min(i.length, kTwoPi);
  return out;
}

bool interval_contains(const Interval& i, double angle, double slack) {
  if (i.length + 2.0 * slack >= kTwoPi) return true;
  const double rel = wrap_positive(angle - i.start);
  return rel <= i.length + slack || rel >= kTwoPi - slack;
}

// Rim pieces of one tile: arcs of its boundary lying on S^1 plus
// boundary vertices touching S^1 outside those arcs.
void tile_rim(const Chain& tile, const Tolerance& tol,
              std::vector<Interval>& arcs, std::vector<Point>& contacts) {
  const double on_rim = std::max(10.0 * tol.len, 1e-9);
  const double gap = std::max(100.0 * tol.len, 1e-9);
  std::vector<Interval> raw;
  for (const Edge& e : tile.edges()) {
    if (!e.is_arc()) continue;
    const Arc& a = e.arc_data();
    if (a.center.norm() > on_rim || std::abs(a.radius - 1.0) > on_rim)
      continue;
    const double lo = a.sweep > 0.0 ? a.start_angle : a.start_angle + a.sweep;
    raw.push_back({wrap_positive(lo), std::abs(a.sweep)});
  }
  arcs = merge_intervals(std::move(raw), gap);
  for (const Edge& e : tile.edges()) {
    const Point v = e.start();
    if (std::abs(v.norm() - 1.0) > on_rim) continue;
    bool covered = false;
    for (const Interval& i : arcs)
      covered = covered || interval_contains(i, v.angle(), gap);
    if (covered) continue;
    bool dup = false;
    for (const Point& c : contacts) dup = dup || distance(c, v) <= on_rim;
    if (!dup) contacts.push_back(v);
  }
}

std::vector<Region> as_regions(const Tiling& t) {
  std::vector<Region> regions;
  regions.reserve(t.tiles.size());
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    try {
      regions.push_back(Region::make(t.tiles[i], t.tol));
    } catch (const Error& e) {
      throw Error("tile " + std::to_string(i) + ": " + e.what());
    }
  }
  return regions;
}

double edge_param_of_point(const Edge& e, Point p) {
  if (e.is_arc()) {
    const Arc& a = e.arc_data();
    const double phi = (p - a.center).angle();
    const double rel = a.sweep > 0.0 ? wrap_positive(phi - a.start_angle)
                                     : wrap_positive(a.start_angle - phi);
    const double span = std::abs(a.sweep);
    if (rel >= kTwoPi - 1e-9) return 0.0;
    return std::clamp(rel / span, 0.0, 1.0);
  }
  const Segment& s = e.segment_data();
  const Point d = s.to - s.from;
  return std::clamp((p - s.from).dot(d) / d.norm2(), 0.0, 1.0);
}

struct PairIntersections {
  // Split parameters per edge of each tile.
  std::vector<std::vector<double>> params_a;
  std::vector<std::vector<double>> params_b;
  std::vector<Edge> overlaps;
  std::vector<Point> points;
};

PairIntersections intersect_boundaries(const Chain& a, const Chain& b,
                                       const Tolerance& tol) {
  PairIntersections out;
  out.params_a.resize(a.size());
  out.params_b.resize(b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      const EdgeIntersection xs = edge_intersect(a.edge(i), b.edge(j), tol);
      for (const Point& p : xs.points) {
        out.points.push_back(p);
        out.params_a[i].push_back(edge_param_of_point(a.edge(i), p));
        out.params_b[j].push_back(edge_param_of_point(b.edge(j), p));
      }
      for (const Edge& o : xs.overlaps) {
        out.overlaps.push_back(o);
        for (const Point p : {o.start(), o.end()}) {
          out.points.push_back(p);
          out.params_a[i].push_back(edge_param_of_point(a.edge(i), p));
          out.params_b[j].push_back(edge_param_of_point(b.edge(j), p));
        }
      }
    }
  }
  return out;
}

// Probes fragment midpoints of `a` against `other`; true plus a witness
// point when some piece of a's boundary lies strictly inside.
std::optional<Point> boundary_enters(
    const Chain& a, const std::vector<std::vector<double>>& splits,
    const Region& other, const Tolerance& tol) {
  const double min_len = 2.0 * std::max(1e3 * tol.len, 1e-6);
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<double> ts = splits[i];
    ts.push_back(0.0);
    ts.push_back(1.0);
    std::sort(ts.begin(), ts.end());
    const double len = a.edge(i).length();
    for (size_t k = 0; k + 1 < ts.size(); ++k) {
      if ((ts[k + 1] - ts[k]) * len < min_len) continue;
      const Point m = a.edge(i).point_at(0.5 * (ts[k] + ts[k + 1]));
      if (point_in_region(other, m, tol) == Side::Inside) return m;
    }
  }
  return std::nullopt;
}

Point overlap_normal(const Edge& o) {
  if (o.is_arc()) {
    const Arc& a = o.arc_data();
    return (o.midpoint() - a.center) / a.radius;
  }
  const Segment& s = o.segment_data();
  return (s.to - s.from).normalized().perp();
}

std::string tile_pair(size_t i, size_t j) {
  return "tiles " + std::to_string(i) + " and " + std::to_string(j);
}

// Shared helper for validate() and circumdisc_separation().
std::optional<std::string> interiors_overlap(const Region& ri,
                                             const Region& rj,
                                             const Tolerance& tol) {
  const PairIntersections xs =
      intersect_boundaries(ri.boundary(), rj.boundary(), tol);
  if (auto w = boundary_enters(ri.boundary(), xs.params_a, rj, tol))
    return "boundary point " + detail::str_point(*w) +
           " lies in the other interior";
  if (auto w = boundary_enters(rj.boundary(), xs.params_b, ri, tol))
    return "boundary point " + detail::str_point(*w) +
           " lies in the other interior";
  const double delta = std::max(1e3 * tol.len, 1e-6);
  for (const Edge& o : xs.overlaps) {
    if (o.length() < 2.0 * delta) continue;
    const Point m = o.midpoint();
    const Point n = overlap_normal(o);
    for (const double side : {1.0, -1.0}) {
      const Point probe = m + n * (side * delta);
      if (point_in_region(ri, probe, tol) == Side::Inside &&
          point_in_region(rj, probe, tol) == Side::Inside)
        return "shared edge at " + detail::str_point(m) +
               " has both interiors on one side";
    }
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- validate

ValidationReport validate(const Tiling& t) {
  ValidationReport rep;
  const Tolerance& tol = t.tol;
  if (t.tiles.empty()) {
    rep.failures.push_back("tiling has no tiles");
    return rep;
  }

  // Jordan structure: closed, simple, positively oriented, inside B^2.
  rep.jordan_ok = true;
  const double disc_slack = std::max(100.0 * tol.len, 1e-9);
  std::vector<std::optional<Region>> regions(t.tiles.size());
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    const Chain& c = t.tiles[i];
    std::string why;
    if (!c.closed()) {
      why = "not closed";
    } else if (auto r = Chain::invalid_reason(c.edges(), true, tol)) {
      why = *r;
    } else if (signed_area(c) <= 0.0) {
      why = "not positively oriented";
    } else {
      for (const Point& p : sample_boundary(c, 16, true)) {
        if (p.norm() > 1.0 + disc_slack) {
          why = "leaves the unit disc at " + detail::str_point(p);
          break;
        }
      }
    }
    if (why.empty()) {
      regions[i] = Region::make(c, tol);
    } else {
      rep.jordan_ok = false;
      rep.failures.push_back("tile " + std::to_string(i) + ": " + why);
    }
  }
  if (!rep.jordan_ok) {
    rep.failures.push_back("structural failure: remaining checks skipped");
    return rep;
  }

  // Coverage: total area and rim arcs.
  double area_sum = 0.0;
  for (const auto& r : regions) area_sum += chain_area(*r);
  rep.area_defect = std::abs(area_sum - kPi);

  std::vector<Interval> all_rim;
  for (const Chain& c : t.tiles) {
    std::vector<Interval> arcs;
    std::vector<Point> contacts;
    tile_rim(c, tol, arcs, contacts);
    all_rim.insert(all_rim.end(), arcs.begin(), arcs.end());
  }
  const double gap = std::max(100.0 * tol.len, 1e-9);
  double covered = 0.0;
  for (const Interval& i : merge_intervals(all_rim, gap)) covered += i.length;
  rep.rim_defect = std::max(0.0, kTwoPi - covered);

  rep.coverage_ok = rep.area_defect <= tol.area && rep.rim_defect <= gap;
  if (rep.area_defect > tol.area)
    rep.failures.push_back("coverage: area defect " +
                           std::to_string(rep.area_defect));
  if (rep.rim_defect > gap)
    rep.failures.push_back("coverage: rim defect " +
                           std::to_string(rep.rim_defect));

  // Pairwise interior disjointness.
  rep.disjoint_ok = true;
  for (size_t i = 0; i < regions.size(); ++i) {
    for (size_t j = i + 1; j < regions.size(); ++j) {
      if (auto why = interiors_overlap(*regions[i], *regions[j], tol)) {
        rep.disjoint_ok = false;
        rep.failures.push_back("disjointness: " + tile_pair(i, j) + ": " +
                               *why);
      }
    }
  }

  // Monohedrality with explicit witnesses.
  rep.monohedral_ok = true;
  rep.witnesses.assign(t.tiles.size(), std::nullopt);
  rep.witnesses[0] = Isometry();
  for (size_t j = 1; j < t.tiles.size(); ++j) {
    rep.witnesses[j] =
        find_congruence(t.tiles[0], t.tiles[j], tol.congruence);
    if (!rep.witnesses[j]) {
      rep.monohedral_ok = false;
      rep.failures.push_back("monohedrality: " + tile_pair(0, j) +
                             " are not congruent");
    }
  }
  return rep;
}

// ----------------------------------------------------------- boundary_arcs

BoundaryArcReport boundary_arcs(const Tiling& t) {
  BoundaryArcReport rep;
  for (const Chain& c : t.tiles) {
    std::vector<Interval> arcs;
    std::vector<Point> contacts;
    tile_rim(c, t.tol, arcs, contacts);
    TileRim rim;
    for (const Interval& i : arcs) {
      rim.arcs.push_back({i.start, i.length});
      rim.total_length += i.length;
    }
    for (const Point& p : contacts)
      rim.arcs.push_back({wrap_positive(p.angle()), 0.0});
    rim.connected = rim.arcs.size() <= 1;
    rep.total_length += rim.total_length;
    rep.all_connected = rep.all_connected && rim.connected;
    rep.per_tile.push_back(std::move(rim));
  }
  return rep;
}

// ------------------------------------------------------------ triple_points

std::vector<TriplePoint> triple_points(const Tiling& t) {
  const Tolerance& tol = t.tol;
  const double cluster = std::max(10.0 * tol.len, 1e-7);

  std::vector<Point> cands;
  for (const Chain& c : t.tiles)
    for (const Edge& e : c.edges()) cands.push_back(e.start());
  for (size_t i = 0; i < t.tiles.size(); ++i) {
    for (size_t j = i + 1; j < t.tiles.size(); ++j) {
      const PairIntersections xs =
          intersect_boundaries(t.tiles[i], t.tiles[j], tol);
      cands.insert(cands.end(), xs.points.begin(), xs.points.end());
    }
  }
  std::sort(cands.begin(), cands.end(), [](Point a, Point b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });

  std::vector<Point> reps;
  for (const Point& p : cands) {
    bool merged = false;
    for (const Point& r : reps) merged = merged || distance(p, r) <= cluster;
    if (!merged) reps.push_back(p);
  }

  std::vector<TriplePoint> out;
  for (const Point& p : reps) {
    TriplePoint tp;
    tp.location = p;
    for (size_t i = 0; i < t.tiles.size(); ++i)
      if (chain_distance(t.tiles[i], p) <= cluster)
        tp.tiles.push_back(int(i));
    if (tp.tiles.size() < 3) continue;
    tp.interior = p.norm() < 1.0 - cluster;
    out.push_back(std::move(tp));
  }
  std::sort(out.begin(), out.end(), [](const TriplePoint& a,
                                       const TriplePoint& b) {
    return a.location.x != b.location.x ? a.location.x < b.location.x
                                        : a.location.y < b.location.y;
  });
  return out;
}

// ------------------------------------------------------- center_containment

CenterCensus center_containment(const Tiling& t) {
  CenterCensus census;
  for (const Region& r : as_regions(t)) {
    const Side s = point_in_region(r, {0.0, 0.0}, t.tol);
    census.per_tile.push_back(s);
    if (s == Side::Inside) ++census.interior_count;
    if (s == Side::Boundary) ++census.boundary_count;
    if (s == Side::Outside) ++census.outside_count;
  }
  return census;
}

// ----------------------------------------------------------- symmetry_order

namespace {

double chain_hausdorff(const Chain& a, const Chain& b, double bound) {
  double worst = 0.0;
  for (const Chain* from : {&a, &b}) {
    const Chain* to = from == &a ? &b : &a;
    for (const Point& p : sample_boundary(*from, 16, true)) {
      worst = std::max(worst, chain_distance(*to, p));
      if (worst > bound) return worst;
    }
  }
  return worst;
}

// Matching permutation of tiles under rotation by 2*pi/m, if one exists.
std::optional<std::vector<int>> rotation_permutation(const Tiling& t, int m,
                                                     const std::vector<Signature>& sigs) {
  const Isometry rot = Isometry::rotation(kTwoPi / m);
  const size_t n = t.tiles.size();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < n; ++i) {
    const Chain image = apply_isometry(rot, t.tiles[i]);
    for (size_t j = 0; j < n; ++j) {
      if (used[j] || sigs[i] != sigs[j]) continue;
      if (chain_hausdorff(image, t.tiles[j], t.tol.match) <= t.tol.match) {
        perm[i] = int(j);
        used[j] = true;
        break;
      }
    }
    if (perm[i] < 0) return std::nullopt;
  }
  return perm;
}

bool is_single_cycle(const std::vector<int>& perm) {
  size_t steps = 0;
  int at = 0;
  do {
    at = perm[at];
    ++steps;
  } while (at != 0 && steps <= perm.size());
  return steps == perm.size();
}

}  // namespace

SymmetryInfo symmetry_order(const Tiling& t) {
  const int n = int(t.tiles.size());
  std::vector<Signature> sigs;
  sigs.reserve(n);
  for (const Chain& c : t.tiles) sigs.push_back(signature(c));

  std::vector<int> divisors;
  for (int m = 1; m <= n; ++m)
    if (n % m == 0) divisors.push_back(m);
  std::sort(divisors.rbegin(), divisors.rend());

  SymmetryInfo info;
  info.order = 1;
  for (const int m : divisors) {
    if (auto perm = rotation_permutation(t, m, sigs)) {
      info.order = m;
      if (m == n) info.rotationally_generated = is_single_cycle(*perm);
      break;
    }
  }
  return info;
}

// ---------------------------------------------------- circumdisc_separation

SeparationReport circumdisc_separation(const Region& d1, const Region& d2,
                                       const Tolerance& tol) {
  SeparationReport rep;
  rep.congruences.clear();
  const std::vector<Isometry> all =
      find_congruence_all(d1.boundary(), d2.boundary(), tol.congruence);
  if (all.empty())
    throw Error("circumdisc_separation: regions are not congruent");
  if (auto why = interiors_overlap(d1, d2, tol))
    throw Error("circumdisc_separation: regions overlap: " + *why);
  for (const Region* r : {&d1, &d2}) {
    const Circle c = region_circumcircle(*r, 64);
    if (c.center.norm() > 1e-6 || std::abs(c.radius - 1.0) > 1e-6)
      throw Error("circumdisc_separation: circumcircle is not S^1 (center " +
                  detail::str_point(c.center) + ", radius " +
                  std::to_string(c.radius) + ")");
  }

  // Rim sets S_1, S_2 as single arcs.
  std::vector<Interval> s1, s2;
  std::vector<Point> contacts;
  tile_rim(d1.boundary(), tol, s1, contacts);
  tile_rim(d2.boundary(), tol, s2, contacts);
  if (s1.size() != 1 || s2.size() != 1)
    throw Error("circumdisc_separation: rim sets are not single arcs");

  const double slack = 1e-7;
  const double len1 = s1[0].length, len2 = s2[0].length;
  const double u2 = wrap_positive(s2[0].start - s1[0].start);
  // Relative to s1.start: S_1 = [0, len1], S_2 = [u2, u2 + len2].
  if (u2 < len1 - slack || u2 + len2 > kTwoPi + slack)
    throw Error("circumdisc_separation: rim arcs interleave");
  // P in the gap after S_1, its antipode in the gap after S_2.
  const double lo = std::max(len1, u2 + len2 - kPi);
  const double hi = std::min(u2, kPi);
  if (lo > hi + slack)
    throw Error("circumdisc_separation: no separating diameter exists");
  // Midpoint of the feasible window (which degenerates to a point for a
  // tiling, where the rim arcs share their endpoints).
  const double theta = s1[0].start + 0.5 * (lo + std::max(lo, hi));
  rep.p = polar(theta);
  rep.q = -rep.p;

  const double ctol = std::max(tol.congruence, 1e-6);
  for (const Isometry& g : all) {
    CongruenceKind kind = CongruenceKind::Other;
    if (g.reflect() && distance(g(rep.p), rep.p) <= ctol &&
        distance(g(rep.q), rep.q) <= ctol) {
      kind = CongruenceKind::LineReflection;
    } else if (!g.reflect() &&
               std::abs(wrap_angle(g.rotation_angle() - kPi)) <= 1e-6 &&
               g.translation_part().norm() <= ctol) {
      kind = CongruenceKind::PointReflection;
    }
    rep.congruences.emplace_back(g, kind);
  }
  return rep;
}

// --------------------------------------------------------- convexity_profile

ConvexityProfile convexity_profile(const Region& d, const Tolerance& tol) {
  ConvexityProfile prof;
  for (const Edge& e : d.boundary().edges()) {
    if (!e.is_arc()) continue;
    const Arc& a = e.arc_data();
    const Point m = e.midpoint();
    const Point toward = (a.center - m) / a.radius;
    bool classified = false;
    double delta = std::max(1e3 * tol.len, 1e-6);
    for (int attempt = 0; attempt < 3 && !classified; ++attempt) {
      const Side in_side = point_in_region(d, m + toward * delta, tol);
      const Side out_side = point_in_region(d, m - toward * delta, tol);
      if (in_side == Side::Inside && out_side == Side::Outside) {
        prof.convex.add_arc(a.radius, e.length(), tol.len);
        classified = true;
      } else if (in_side == Side::Outside && out_side == Side::Inside) {
        prof.concave.add_arc(a.radius, e.length(), tol.len);
        classified = true;
      }
      delta *= 10.0;
    }
    if (!classified)
      throw Error("convexity_profile: probe inconclusive at " +
                  detail::str_point(m));
  }
  return prof;
}

}  // namespace disctiler
