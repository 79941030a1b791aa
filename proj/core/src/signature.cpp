#include "disctiler/signature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace disctiler {

namespace {

constexpr std::int64_t kNoTurn = std::numeric_limits<std::int64_t>::min();

// Merge consecutive edges lying on the same support with a smooth joint
// so that congruence does not depend on how a boundary was subdivided.
bool mergeable(const Edge& e, const Edge& f, const Tolerance& tol) {
  const double m = 10.0 * tol.len;
  if (e.is_arc() != f.is_arc()) return false;
  if (e.is_arc()) {
    const Arc& ea = e.arc_data();
    const Arc& fa = f.arc_data();
    return distance(ea.center, fa.center) <= m &&
           std::abs(ea.radius - fa.radius) <= m &&
           (ea.sweep > 0.0) == (fa.sweep > 0.0) &&
           std::abs(ea.sweep) + std::abs(fa.sweep) <= kTwoPi + tol.ang;
  }
  const Point de = (e.end() - e.start()).normalized();
  const Point df = (f.end() - f.start()).normalized();
  return std::abs(de.cross(df)) <= 1e-9 && de.dot(df) > 0.0;
}

Edge merge(const Edge& e, const Edge& f) {
  if (e.is_arc()) {
    const Arc& ea = e.arc_data();
    return Edge::arc(ea.center, ea.radius, ea.start_angle,
                     ea.sweep + f.arc_data().sweep);
  }
  return Edge::segment(e.start(), f.end());
}

Chain normalize_chain(const Chain& c, const Tolerance& tol) {
  std::vector<Edge> edges(c.edges().begin(), c.edges().end());
  bool changed = true;
  while (changed && edges.size() > 1) {
    changed = false;
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
      if (mergeable(edges[i], edges[i + 1], tol)) {
        edges[i] = merge(edges[i], edges[i + 1]);
        edges.erase(edges.begin() + i + 1);
        changed = true;
        break;
      }
    }
    if (!changed && c.closed() && edges.size() > 1 &&
        mergeable(edges.back(), edges.front(), tol)) {
      edges.back() = merge(edges.back(), edges.front());
      edges.erase(edges.begin());
      changed = true;
    }
  }
  return Chain::unchecked(std::move(edges), c.closed());
}

double turn_between(const Edge& e, const Edge& f) {
  const Point a = e.tangent_at(1.0);
  const Point b = f.tangent_at(0.0);
  return std::atan2(a.cross(b), a.dot(b));
}

std::int64_t quantize(double x, double quantum) {
  const double q = x / quantum;
  const double lim = 4e18;
  return std::llround(std::clamp(q, -lim, lim));
}

using QFeature = std::array<std::int64_t, 4>;  // kind, length, curvature, turn

std::vector<QFeature> quantized_features(const Chain& c, double quantum) {
  const size_t n = c.size();
  std::vector<QFeature> out(n);
  for (size_t i = 0; i < n; ++i) {
    const Edge& e = c.edge(i);
    out[i][0] = e.is_arc() ? 1 : 0;
    out[i][1] = quantize(e.length(), quantum);
    out[i][2] = quantize(e.curvature(), quantum);
    if (i + 1 < n)
      out[i][3] = quantize(turn_between(e, c.edge(i + 1)), quantum);
    else if (c.closed())
      out[i][3] = quantize(turn_between(e, c.edge(0)), quantum);
    else
      out[i][3] = kNoTurn;
  }
  return out;
}

std::vector<QFeature> reversed_features(const std::vector<QFeature>& in,
                                        bool closed) {
  const size_t n = in.size();
  std::vector<QFeature> out(n);
  for (size_t k = 0; k < n; ++k) {
    const QFeature& src = in[n - 1 - k];
    out[k][0] = src[0];
    out[k][1] = src[1];
    out[k][2] = -src[2];
    if (k + 1 < n) {
      const std::int64_t t = in[n - 2 - k][3];
      out[k][3] = t == kNoTurn ? kNoTurn : -t;
    } else if (closed) {
      const std::int64_t t = in[n - 1][3];
      out[k][3] = t == kNoTurn ? kNoTurn : -t;
    } else {
      out[k][3] = kNoTurn;
    }
  }
  return out;
}

void flip_features(std::vector<QFeature>& f) {
  for (QFeature& q : f) {
    q[2] = -q[2];
    if (q[3] != kNoTurn) q[3] = -q[3];
  }
}

std::vector<QFeature> min_rotation(std::vector<QFeature> f, bool closed) {
  if (!closed || f.size() < 2) return f;
  std::vector<QFeature> best = f;
  for (size_t r = 1; r < f.size(); ++r) {
    std::rotate(f.begin(), f.begin() + 1, f.end());
    if (f < best) best = f;
  }
  return best;
}

}  // namespace

Signature Signature::of(const Chain& c, double quantum) {
  if (c.empty()) throw Error("signature: empty chain");
  const Chain n = normalize_chain(c, Tolerance{});
  const std::vector<QFeature> base = quantized_features(n, quantum);
  std::vector<std::vector<QFeature>> variants;
  for (const bool rev : {false, true}) {
    for (const bool flip : {false, true}) {
      std::vector<QFeature> seq =
          rev ? reversed_features(base, n.closed()) : base;
      if (flip) flip_features(seq);
      variants.push_back(min_rotation(std::move(seq), n.closed()));
    }
  }
  Signature s;
  s.canon_ = *std::min_element(variants.begin(), variants.end());
  s.base_ = base;
  s.closed_ = n.closed();
  return s;
}

namespace {

// Within one grid cell per numeric field; kinds and sentinels exact.
bool adjacent(const std::vector<QFeature>& a, const std::vector<QFeature>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i][0] != b[i][0]) return false;
    for (int f = 1; f < 4; ++f) {
      const bool sa = a[i][f] == kNoTurn, sb = b[i][f] == kNoTurn;
      if (sa != sb) return false;
      if (!sa && std::abs(a[i][f] - b[i][f]) > 1) return false;
    }
  }
  return true;
}

}  // namespace

bool Signature::operator==(const Signature& o) const {
  if (canon_ == o.canon_) return true;
  if (closed_ != o.closed_ || base_.size() != o.base_.size()) return false;
  for (const bool rev : {false, true}) {
    for (const bool flip : {false, true}) {
      std::vector<QFeature> seq =
          rev ? reversed_features(o.base_, o.closed_) : o.base_;
      if (flip) flip_features(seq);
      const size_t rotations = closed_ ? seq.size() : 1;
      for (size_t r = 0; r < rotations; ++r) {
        if (adjacent(base_, seq)) return true;
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
      }
    }
  }
  return false;
}

Signature signature(const Chain& c, double quantum) {
  return Signature::of(c, quantum);
}

namespace {

struct Candidate {
  Isometry g;
  double abs_rot;
  double trans_norm;
};

bool verify(const Isometry& g, const Chain& a, const Chain& tb, size_t offset,
            double eps) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    const Edge& ea = a.edge(i);
    const Edge& eb = tb.edge((i + offset) % n);
    if (ea.is_arc() != eb.is_arc()) return false;
    if (ea.is_arc() &&
        std::abs(ea.arc_data().radius - eb.arc_data().radius) > eps)
      return false;
    for (const double t : {0.0, 0.5, 1.0})
      if (distance(g(ea.point_at(t)), eb.point_at(t)) > eps) return false;
  }
  return true;
}

}  // namespace

std::vector<Isometry> find_congruence_all(const Chain& a0, const Chain& b0,
                                          double eps) {
  if (a0.empty() || b0.empty()) return {};
  const Tolerance tol;
  const Chain a = normalize_chain(a0, tol);
  const size_t n = a.size();

  // Fit from the longest edge: its start and midpoint are always well
  // separated, including for full-circle arcs.
  size_t fit = 0;
  for (size_t i = 1; i < n; ++i)
    if (a.edge(i).length() > a.edge(fit).length()) fit = i;
  const Point a_f0 = a.edge(fit).point_at(0.0);
  const Point a_f1 = a.edge(fit).point_at(0.5);
  const Point va = a_f1 - a_f0;
  const Point va_m{va.x, -va.y};

  std::vector<Isometry> found;
  auto emit = [&](const Isometry& g) {
    for (const Isometry& h : found) {
      if (h.reflect() == g.reflect() &&
          std::abs(wrap_angle(h.rotation_angle() - g.rotation_angle())) <=
              1e-9 &&
          distance(h.translation_part(), g.translation_part()) <= 1e-9)
        return;
    }
    found.push_back(g);
  };

  for (const bool rev : {false, true}) {
    const Chain tb = rev ? normalize_chain(b0, tol).reversed()
                         : normalize_chain(b0, tol);
    if (tb.size() != n || tb.closed() != a.closed()) continue;
    const size_t max_offset = a.closed() ? n : 1;
    for (size_t j = 0; j < max_offset; ++j) {
      // Cheap feature precheck along the whole correspondence.
      bool plausible = true;
      for (size_t i = 0; i < n && plausible; ++i) {
        const Edge& ea = a.edge(i);
        const Edge& eb = tb.edge((i + j) % n);
        plausible = ea.is_arc() == eb.is_arc() &&
                    std::abs(ea.length() - eb.length()) <=
                        10.0 * eps + 1e-12 * (1.0 + ea.length());
      }
      if (!plausible) continue;

      const Edge& target = tb.edge((fit + j) % n);
      const Point b_f0 = target.point_at(0.0);
      const Point b_f1 = target.point_at(0.5);
      const Point vb = b_f1 - b_f0;
      if (std::abs(va.norm() - vb.norm()) > 2.0 * eps) continue;

      for (const bool reflect : {false, true}) {
        const Point src = reflect ? va_m : va;
        const double theta = vb.angle() - src.angle();
        Isometry g = Isometry::make(reflect, theta, {0.0, 0.0});
        g = Isometry::make(reflect, theta, b_f0 - g(a_f0));
        if (verify(g, a, tb, j, eps)) emit(g);
      }
    }
  }
  return found;
}

std::optional<Isometry> find_congruence(const Chain& a, const Chain& b,
                                        double eps) {
  const std::vector<Isometry> all = find_congruence_all(a, b, eps);
  if (all.empty()) return std::nullopt;
  const Isometry* best = &all.front();
  auto key = [](const Isometry& g) {
    return std::array<double, 6>{std::abs(g.rotation_angle()),
                                 g.translation_part().norm(),
                                 g.reflect() ? 1.0 : 0.0,
                                 g.rotation_angle(),
                                 g.translation_part().x,
                                 g.translation_part().y};
  };
  for (const Isometry& g : all)
    if (key(g) < key(*best)) best = &g;
  return *best;
}

}  // namespace disctiler
