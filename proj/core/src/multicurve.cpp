#include "disctiler/multicurve.hpp"

#include <algorithm>
#include <cmath>

#include "disctiler/intersect.hpp"

namespace disctiler {

namespace {

bool is_member_endpoint(const Chain& c, Point p, double slop) {
  if (c.closed()) return false;
  return distance(c.start(), p) <= slop || distance(c.end(), p) <= slop;
}

}  // namespace

Multicurve Multicurve::make(std::vector<Chain> members, const Tolerance& tol) {
  const double slop = std::max(100.0 * tol.len, 1e-10);
  for (size_t i = 0; i < members.size(); ++i) {
    if (auto why = Chain::invalid_reason(members[i].edges(),
                                         members[i].closed(), tol))
      throw Error("multicurve member " + std::to_string(i) + ": " + *why);
  }
  for (size_t i = 0; i < members.size(); ++i) {
    for (size_t j = i + 1; j < members.size(); ++j) {
      for (const Edge& ei : members[i].edges()) {
        for (const Edge& ej : members[j].edges()) {
          const EdgeIntersection xs = edge_intersect(ei, ej, tol);
          if (!xs.overlaps.empty())
            throw Error("multicurve members " + std::to_string(i) + " and " +
                        std::to_string(j) + " overlap");
          for (const Point& p : xs.points) {
            if (!is_member_endpoint(members[i], p, slop) ||
                !is_member_endpoint(members[j], p, slop))
              throw Error("multicurve members " + std::to_string(i) + " and " +
                          std::to_string(j) + " meet at a non-endpoint " +
                          detail::str_point(p));
          }
        }
      }
    }
  }
  // No plane point may be the endpoint of three or more members.
  std::vector<Point> endpoints;
  for (const Chain& m : members) {
    if (m.closed()) continue;
    endpoints.push_back(m.start());
    endpoints.push_back(m.end());
  }
  for (size_t i = 0; i < endpoints.size(); ++i) {
    int count = 1;
    for (size_t j = 0; j < endpoints.size(); ++j)
      if (j != i && distance(endpoints[i], endpoints[j]) <= slop) ++count;
    if (count > 2)
      throw Error("multicurve: point " + detail::str_point(endpoints[i]) +
                  " is an endpoint of more than two members");
  }
  return unchecked(std::move(members));
}

Multicurve Multicurve::unchecked(std::vector<Chain> members) {
  Multicurve m;
  m.members_ = std::move(members);
  return m;
}

// ----------------------------------------------------------- LengthProfile

void LengthProfile::add_arc(double radius, double len, double radius_tol) {
  for (auto& [r, total] : arcs_) {
    if (std::abs(r - radius) <= radius_tol) {
      total += len;
      return;
    }
  }
  arcs_.emplace_back(radius, len);
  std::sort(arcs_.begin(), arcs_.end());
}

double LengthProfile::arc_total(double radius, double radius_tol) const {
  for (const auto& [r, total] : arcs_)
    if (std::abs(r - radius) <= radius_tol) return total;
  return 0.0;
}

bool LengthProfile::approx_equal(const LengthProfile& o, double eps) const {
  if (std::abs(segment_ - o.segment_) > eps) return false;
  for (const auto& [r, total] : arcs_)
    if (std::abs(total - o.arc_total(r)) > eps) return false;
  for (const auto& [r, total] : o.arcs_)
    if (std::abs(total - arc_total(r)) > eps) return false;
  return true;
}

LengthProfile LengthProfile::minus(const LengthProfile& o,
                                   double radius_tol) const {
  LengthProfile out = *this;
  out.segment_ -= o.segment_;
  for (const auto& [r, total] : o.arcs_) out.add_arc(r, -total, radius_tol);
  return out;
}

LengthProfile length_profile(const Multicurve& m, const Tolerance& tol) {
  LengthProfile p;
  for (const Chain& member : m.members()) {
    for (const Edge& e : member.edges()) {
      if (e.is_arc())
        p.add_arc(e.arc_data().radius, e.length(), tol.len);
      else
        p.add_segment(e.length());
    }
  }
  return p;
}

// --------------------------------------------------------- equidecomposable

namespace {

struct ClassItem {
  int member;
  int edge;
  const Edge* geometry;
};

// Items of one curvature class in (member, edge) order.
std::vector<ClassItem> class_items(const Multicurve& m, bool arcs,
                                   double radius, double radius_tol) {
  std::vector<ClassItem> out;
  for (int i = 0; i < int(m.size()); ++i) {
    const auto edges = m.member(i).edges();
    for (int j = 0; j < int(edges.size()); ++j) {
      const Edge& e = edges[j];
      if (e.is_arc() != arcs) continue;
      if (arcs && std::abs(e.arc_data().radius - radius) > radius_tol)
        continue;
      out.push_back({i, j, &e});
    }
  }
  return out;
}

// Greedy cut-and-match: repeatedly cut the longer current piece of each
// side to the length of the shorter.  Any two same-class pieces of equal
// length are congruent, so every pair emitted is a valid witness pair.
void match_class(const std::vector<ClassItem>& fs,
                 const std::vector<ClassItem>& gs, double len_eps,
                 std::vector<std::pair<WitnessPiece, WitnessPiece>>& out) {
  size_t fi = 0, gi = 0;
  double ft = 0.0, gt = 0.0;  // consumed parameter fraction
  while (fi < fs.size() && gi < gs.size()) {
    const double flen = fs[fi].geometry->length();
    const double glen = gs[gi].geometry->length();
    const double frem = flen * (1.0 - ft);
    const double grem = glen * (1.0 - gt);
    const double take = std::min(frem, grem);
    const double f1 = ft + take / flen;
    const double g1 = gt + take / glen;
    out.push_back({WitnessPiece{fs[fi].member, fs[fi].edge, ft, f1,
                                fs[fi].geometry->slice(ft, f1)},
                   WitnessPiece{gs[gi].member, gs[gi].edge, gt, g1,
                                gs[gi].geometry->slice(gt, g1)}});
    ft = f1;
    gt = g1;
    if (flen * (1.0 - ft) <= len_eps) {
      ++fi;
      ft = 0.0;
    }
    if (glen * (1.0 - gt) <= len_eps) {
      ++gi;
      gt = 0.0;
    }
  }
}

bool chains_match(const Chain& a, const Chain& b, double eps) {
  if (a.size() != b.size() || a.closed() != b.closed()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a.edge(i).is_arc() != b.edge(i).is_arc()) return false;
    for (const double t : {0.0, 0.5, 1.0})
      if (distance(a.edge(i).point_at(t), b.edge(i).point_at(t)) > eps)
        return false;
  }
  return true;
}

std::vector<Chain> complement_members(const Multicurve& whole,
                                      const Multicurve& part, double eps,
                                      const char* label) {
  std::vector<bool> used(whole.size(), false);
  for (const Chain& sub : part.members()) {
    bool matched = false;
    for (size_t i = 0; i < whole.size() && !matched; ++i) {
      if (!used[i] && chains_match(sub, whole.member(i), eps)) {
        used[i] = true;
        matched = true;
      }
    }
    if (!matched)
      throw Error(std::string(label) +
                  " is not a subfamily: a member has no match");
  }
  std::vector<Chain> rest;
  for (size_t i = 0; i < whole.size(); ++i)
    if (!used[i]) rest.push_back(whole.member(i));
  return rest;
}

}  // namespace

EquidecompResult equidecomposable(const Multicurve& f, const Multicurve& g,
                                  double eps, const Tolerance& tol) {
  EquidecompResult res;
  res.f_profile = length_profile(f, tol);
  res.g_profile = length_profile(g, tol);
  res.decision = res.f_profile.approx_equal(res.g_profile, eps);
  if (!res.decision) return res;

  const double len_eps = std::max(eps, tol.len);
  match_class(class_items(f, false, 0.0, tol.len),
              class_items(g, false, 0.0, tol.len), len_eps, res.pieces);
  // Radius classes from the union of both profiles.
  std::vector<double> radii;
  for (const auto& [r, total] : res.f_profile.arc_classes()) {
    (void)total;
    radii.push_back(r);
  }
  for (const auto& [r, total] : res.g_profile.arc_classes()) {
    (void)total;
    bool known = false;
    for (const double k : radii) known = known || std::abs(k - r) <= tol.len;
    if (!known) radii.push_back(r);
  }
  std::sort(radii.begin(), radii.end());
  for (const double r : radii)
    match_class(class_items(f, true, r, tol.len),
                class_items(g, true, r, tol.len), len_eps, res.pieces);
  return res;
}

EquidecompResult subtract_decomposition(const Multicurve& f,
                                        const Multicurve& f_sub,
                                        const Multicurve& g,
                                        const Multicurve& g_sub, double eps,
                                        const Tolerance& tol) {
  const double match_eps = std::max(10.0 * tol.len, 1e-9);
  Multicurve fc = Multicurve::unchecked(
      complement_members(f, f_sub, match_eps, "f'"));
  Multicurve gc = Multicurve::unchecked(
      complement_members(g, g_sub, match_eps, "g'"));
  return equidecomposable(fc, gc, eps, tol);
}

}  // namespace disctiler
