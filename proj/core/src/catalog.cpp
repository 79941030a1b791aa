#include "disctiler/catalog.hpp"

#include <cmath>
#include <random>

#include "disctiler/intersect.hpp"
#include "disctiler/signature.hpp"

namespace disctiler {

namespace {

constexpr double kThird = kPi / 3.0;

// 60-degree unit arc from the rim vertex at angle phi to the center O;
// its supporting circle is centered at the rim point at phi - 60deg.
Arc vertex_arc(double phi) {
  return Arc{polar(phi - kThird), 1.0, phi + kThird, kThird};
}

// Pieces of the vertex arc, as edges.
Edge varc_full(double phi) {
  const Arc a = vertex_arc(phi);
  return Edge::arc(a.center, 1.0, a.start_angle, a.sweep);
}
Edge varc_full_rev(double phi) { return varc_full(phi).reversed(); }
Edge varc_first_half(double phi) {  // vertex -> arc midpoint
  const Arc a = vertex_arc(phi);
  return Edge::arc(a.center, 1.0, a.start_angle, 0.5 * a.sweep);
}
Edge varc_second_half(double phi) {  // arc midpoint -> O
  const Arc a = vertex_arc(phi);
  return Edge::arc(a.center, 1.0, a.start_angle + 0.5 * a.sweep,
                   0.5 * a.sweep);
}
Edge varc_first_half_rev(double phi) { return varc_first_half(phi).reversed(); }
Edge varc_second_half_rev(double phi) {
  return varc_second_half(phi).reversed();
}

Point varc_midpoint(double phi) {
  return polar(phi - kThird) + polar(phi + kPi / 2.0);
}

// 60-degree unit arc from the vertex at phi to the midpoint of the
// vertex arc rooted 60 degrees further (the half-offset arc of the
// radially generated tilings).
Edge offset_arc(double phi) {
  const Point center = polar(phi) - polar(phi + kPi / 6.0);
  return Edge::arc(center, 1.0, phi + kPi / 6.0, kThird);
}
Edge offset_arc_rev(double phi) { return offset_arc(phi).reversed(); }

Edge rim(double from, double sweep) {
  return Edge::arc({0.0, 0.0}, 1.0, from, sweep);
}

Chain tile(std::initializer_list<Edge> edges, const Tolerance& tol) {
  return Chain::make(std::vector<Edge>(edges), true, tol);
}

Tiling finish(std::vector<Chain> tiles, const Tolerance& tol,
              std::string_view name) {
  Tiling t{std::move(tiles), tol};
  for (size_t j = 1; j < t.tiles.size(); ++j) {
    if (!find_congruence(t.tiles[0], t.tiles[j], tol.congruence))
      throw Error(std::string(name) + ": tiles 0 and " + std::to_string(j) +
                  " failed monohedrality verification");
  }
  return t;
}

Tiling build_rot2(const Tolerance& tol) {
  std::vector<Chain> tiles;
  tiles.push_back(tile({rim(0.0, kPi),
                        Edge::segment({-1.0, 0.0}, {1.0, 0.0}, tol)},
                       tol));
  tiles.push_back(tile({rim(kPi, kPi),
                        Edge::segment({1.0, 0.0}, {-1.0, 0.0}, tol)},
                       tol));
  return finish(std::move(tiles), tol, "rot2");
}

Tiling build_rot3(const Tolerance& tol) {
  std::vector<Chain> tiles;
  for (int x = 0; x < 3; ++x) {
    const double phi = kTwoPi * x / 3.0;
    const double next = kTwoPi * (x + 1) / 3.0;
    tiles.push_back(tile({rim(phi, kTwoPi / 3.0), varc_full(next),
                          varc_full_rev(phi)},
                         tol));
  }
  return finish(std::move(tiles), tol, "rot3");
}

Tiling build_hw12(const Tolerance& tol) {
  std::vector<Chain> tiles;
  for (int x = 0; x < 6; ++x) {
    const double phi = kThird * x;
    const double next = kThird * (x + 1);
    tiles.push_back(tile({rim(phi, kThird), varc_first_half(next),
                          offset_arc_rev(phi)},
                         tol));
    tiles.push_back(tile({offset_arc(phi), varc_second_half(next),
                          varc_full_rev(phi)},
                         tol));
  }
  return finish(std::move(tiles), tol, "hw12");
}

Tiling build_petal12(const Tolerance& tol) {
  std::vector<Chain> tiles;
  for (int x = 0; x < 6; ++x) {
    const double phi = kThird * x;
    const double next = kThird * (x + 1);
    const Point vnext = polar(next);
    const Point mid = varc_midpoint(phi);
    tiles.push_back(tile({rim(phi, kThird), Edge::segment(vnext, mid, tol),
                          varc_first_half_rev(phi)},
                         tol));
    tiles.push_back(tile({Edge::segment(mid, vnext, tol), varc_full(next),
                          varc_second_half_rev(phi)},
                         tol));
  }
  return finish(std::move(tiles), tol, "petal12");
}

Tiling build_hw12flip(const Tolerance& tol) {
  // Twelve 30-degree rim points; every vertex except x = 8 carries the
  // arc to O, and the double cell between the arcs at x = 7 and x = 9 is
  // split by the half-offset arc rooted at x = 7.
  std::vector<Chain> tiles;
  const double step = kPi / 6.0;
  for (int x = 0; x <= 6; ++x) {
    const double phi = step * x;
    tiles.push_back(tile({rim(phi, step), varc_full(phi + step),
                          varc_full_rev(phi)},
                         tol));
  }
  const double phi7 = step * 7;
  const double phi9 = step * 9;
  tiles.push_back(tile({rim(phi7, 2.0 * step), varc_first_half(phi9),
                        offset_arc_rev(phi7)},
                       tol));
  tiles.push_back(tile({offset_arc(phi7), varc_second_half(phi9),
                        varc_full_rev(phi7)},
                       tol));
  for (int x = 9; x <= 11; ++x) {
    const double phi = step * x;
    tiles.push_back(tile({rim(phi, step), varc_full(phi + step),
                          varc_full_rev(phi)},
                         tol));
  }
  return finish(std::move(tiles), tol, "hw12flip");
}

void validate_generator(const Chain& chain, int n, const Tolerance& tol) {
  if (n < 1) throw Error("generator: rotation count must be >= 1");
  if (chain.closed()) throw Error("generator: chain must be open");
  if (auto why = Chain::invalid_reason(chain.edges(), false, tol))
    throw Error("generator: " + *why);
  const double slop = std::max(100.0 * tol.len, 1e-9);
  if (chain.start().norm() > slop)
    throw Error("generator: must start at the disc center");
  if (std::abs(chain.end().norm() - 1.0) > slop)
    throw Error("generator: must end on the unit circle");
  for (const Point& p : sample_boundary(chain, 16, true))
    if (p.norm() > 1.0 + slop)
      throw Error("generator: leaves the unit disc at " +
                  detail::str_point(p));
  for (int k = 1; k < n; ++k) {
    const Chain copy =
        apply_isometry(Isometry::rotation(kTwoPi * k / n), chain);
    for (const Edge& e : chain.edges()) {
      for (const Edge& f : copy.edges()) {
        const EdgeIntersection xs = edge_intersect(e, f, tol);
        if (!xs.overlaps.empty())
          throw Error("generator: rotated copies overlap");
        for (const Point& p : xs.points)
          if (p.norm() > slop)
            throw Error(
                "generator: leaves its sector (rotated copies meet at " +
                detail::str_point(p) + ")");
      }
    }
  }
}

}  // namespace

GeneratorCurve make_generator(Chain chain, int n, const Tolerance& tol) {
  validate_generator(chain, n, tol);
  return GeneratorCurve{std::move(chain), kTwoPi / n};
}

Tiling build_rotgen(const GeneratorCurve& g, int n, const Tolerance& tol) {
  validate_generator(g.chain, n, tol);
  std::vector<Chain> tiles;
  if (n == 1) {
    const double a0 = g.chain.end().angle();
    tiles.push_back(tile({rim(a0, kPi), rim(a0 + kPi, kPi)}, tol));
    return Tiling{std::move(tiles), tol};
  }
  const double a0 = g.chain.end().angle();
  const double sector = kTwoPi / n;
  for (int j = 0; j < n; ++j) {
    const Chain gen_j =
        apply_isometry(Isometry::rotation(sector * j), g.chain);
    const Chain gen_next =
        apply_isometry(Isometry::rotation(sector * (j + 1)), g.chain)
            .reversed();
    std::vector<Edge> edges(gen_j.edges().begin(), gen_j.edges().end());
    edges.push_back(rim(a0 + sector * j, sector));
    edges.insert(edges.end(), gen_next.edges().begin(),
                 gen_next.edges().end());
    tiles.push_back(Chain::make(std::move(edges), true, tol));
  }
  return Tiling{std::move(tiles), tol};
}

std::vector<std::string> catalog_names() {
  return {"rot2", "rot3", "hw12", "petal12", "hw12flip"};
}

Tiling build_named(std::string_view name, const Tolerance& tol) {
  if (name == "rot2") return build_rot2(tol);
  if (name == "rot3") return build_rot3(tol);
  if (name == "hw12") return build_hw12(tol);
  if (name == "petal12") return build_petal12(tol);
  if (name == "hw12flip") return build_hw12flip(tol);
  throw Error("unknown catalog tiling: " + std::string(name));
}

GeneratorCurve random_generator(std::uint64_t seed, int n, int complexity,
                                const Tolerance& tol) {
  if (n < 1) throw Error("random_generator: n must be >= 1");
  if (complexity < 1 || complexity > 8)
    throw Error("random_generator: complexity must be in [1, 8]");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + std::uint64_t(n) * 1000003ull +
                      std::uint64_t(complexity));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double sector = kTwoPi / n;
  const int m = complexity;

  for (int attempt = 0; attempt < 96; ++attempt) {
    // Later attempts draw flatter arcs and finally plain segments, which
    // are always monotone between angle-ordered waypoints.
    const double arc_prob = attempt < 32 ? 0.45 : attempt < 64 ? 0.25 : 0.0;
    const double flatten = 1.0 + 0.5 * (attempt / 16);
    // Waypoint angles: strictly increasing within the sector, with edge
    // margins left for arc bulges.
    std::vector<double> cum(m + 1, 0.0);
    for (int i = 1; i <= m; ++i) cum[i] = cum[i - 1] + 0.5 + unit(rng);
    std::vector<double> theta(m + 1, 0.0);
    for (int i = 1; i <= m; ++i)
      theta[i] = sector * (0.08 + 0.80 * cum[i] / cum[m]);
    // Radii: increasing toward the rim.
    std::vector<double> rho(m + 1, 0.0);
    bool ok = true;
    for (int i = 1; i < m; ++i) {
      rho[i] = 0.20 + 0.78 * double(i) / m + (unit(rng) - 0.5) * 0.3 / m;
      if (i > 1 && rho[i] < rho[i - 1] + 0.02) rho[i] = rho[i - 1] + 0.02;
      if (rho[i] > 0.96) ok = false;
    }
    rho[m] = 1.0;
    if (!ok) continue;

    std::vector<Point> w(m + 1);
    w[0] = {0.0, 0.0};
    for (int i = 1; i <= m; ++i) w[i] = polar(theta[i], rho[i]);

    std::vector<Edge> edges;
    for (int i = 1; i <= m && ok; ++i) {
      const double c = distance(w[i - 1], w[i]);
      const bool want_arc = unit(rng) < arc_prob;
      const double rlo = std::max(0.5, c * flatten);
      if (want_arc && rlo <= 3.0) {
        const double radius = rlo + unit(rng) * (3.0 - rlo);
        const bool left = unit(rng) < 0.5;
        edges.push_back(Edge::arc_through(w[i - 1], w[i], radius, left, tol));
      } else {
        edges.push_back(Edge::segment(w[i - 1], w[i], tol));
      }
    }
    if (!ok || Chain::invalid_reason(edges, false, tol)) continue;
    const Chain chain = Chain::unchecked(std::move(edges), false);

    // Polar-angle monotonicity inside the sector, staying in the disc.
    bool monotone = true;
    double unwrapped = 0.0;
    std::optional<double> prev;
    for (const Edge& e : chain.edges()) {
      for (int k = 0; k <= 32 && monotone; ++k) {
        const Point p = e.point_at(double(k) / 32.0);
        if (p.norm() > 1.0 + 1e-12) monotone = false;
        if (p.norm() < 1e-9) continue;
        const double a = p.angle();
        if (n > 1) {
          // Sector <= pi, so wrapped angles place the point absolutely.
          const double abs_a = wrap_angle(a);
          if (abs_a < -1e-9 || abs_a > 0.97 * sector) monotone = false;
        }
        if (prev) {
          const double d = wrap_angle(a - *prev);
          if (d < -1e-9) monotone = false;
          unwrapped += d;
          if (unwrapped > 0.97 * sector) monotone = false;
        }
        prev = a;
      }
      if (!monotone) break;
    }
    if (!monotone) continue;

    try {
      return make_generator(chain, n, tol);
    } catch (const Error&) {
      continue;
    }
  }
  throw Error("random_generator: no valid generator after 96 attempts");
}

std::vector<ArcEquationHit> scan_arc_equation(int k_max, long long n_max,
                                              double delta, bool corrected) {
  if (k_max < 3) throw Error("scan_arc_equation: k_max must be >= 3");
  if (n_max < 1) throw Error("scan_arc_equation: n_max must be >= 1");
  if (delta <= 0.0) throw Error("scan_arc_equation: delta must be positive");
  std::vector<ArcEquationHit> hits;
  const double num = corrected ? 2.0 : 4.0;
  for (int k = 3; k <= k_max; ++k) {
    const double lhs = std::sin(kTwoPi / k);
    for (long long n = 1; n <= n_max; ++n) {
      const double residual = std::abs(lhs - kPi * (2.0 / k - num / n));
      if (residual <= delta) hits.push_back({k, n, residual});
    }
  }
  return hits;
}

}  // namespace disctiler
