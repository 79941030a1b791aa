#include <doctest.h>

#include <cmath>
#include <random>

#include "disctiler/catalog.hpp"
#include "disctiler/geometry.hpp"
#include "support/oracles.hpp"

using namespace disctiler;

namespace {

Edge unit_arc(double start, double sweep) {
  return Edge::arc({0.0, 0.0}, 1.0, start, sweep);
}

Chain unit_disc_chain() {
  return Chain::make({unit_arc(0.0, kPi), unit_arc(kPi, kPi)}, true);
}

Chain unit_square() {
  return Chain::make({Edge::segment({0, 0}, {1, 0}), Edge::segment({1, 0}, {1, 1}),
                      Edge::segment({1, 1}, {0, 1}), Edge::segment({0, 1}, {0, 0})},
                     true);
}

}  // namespace

TEST_CASE("edge_length closed forms") {
  CHECK(edge_length(unit_arc(0.2, kPi / 3)) == doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK(edge_length(Edge::segment({0, 0}, {3, 4})) == doctest::Approx(5.0).epsilon(1e-14));
  CHECK(edge_length(Edge::arc({1, 1}, 2.0, 0.4, -kPi)) ==
        doctest::Approx(2.0 * kPi).epsilon(1e-14));
}

TEST_CASE("degenerate edges are rejected at construction") {
  CHECK_THROWS_AS(Edge::segment({0, 0}, {0, 0}), Error);
  CHECK_THROWS_AS(Edge::segment({0, 0}, {5e-10, 0}), Error);
  CHECK_THROWS_AS(Edge::arc({0, 0}, 1.0, 0.0, 0.0), Error);
  CHECK_THROWS_AS(Edge::arc({0, 0}, -1.0, 0.0, 1.0), Error);
  CHECK_THROWS_AS(Edge::arc({0, 0}, 1.0, 0.0, 3e-10), Error);
  CHECK_THROWS_AS(Edge::arc({0, 0},
                            std::numeric_limits<double>::quiet_NaN(), 0.0,
                            1.0),
                  Error);
}

TEST_CASE("chain_area: disc, square, rot3 tile") {
  CHECK(signed_area(unit_disc_chain()) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(signed_area(unit_square()) == doctest::Approx(1.0).epsilon(1e-14));

  const Tiling rot3 = build_named("rot3");
  const Region tile = Region::make(rot3.tiles[0]);
  CHECK(chain_area(tile) == doctest::Approx(kPi / 3).epsilon(1e-12));
  // Independent Monte Carlo oracle over the polyline classifier.
  const double mc = oracles::qmc_chain_area(rot3.tiles[0], 2'000'000);
  CHECK(std::abs(mc - kPi / 3) < 1e-3);
  CHECK(std::abs(chain_area(tile) - mc) < 1e-3);
}

TEST_CASE("signed_area rejects open chains") {
  const Chain open = Chain::make({Edge::segment({0, 0}, {1, 0})}, false);
  CHECK_THROWS_AS(signed_area(open), Error);
}

TEST_CASE("isometry composition and inverse") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 200; ++i) {
    const Isometry g = oracles::random_isometry(rng);
    const Isometry h = oracles::random_isometry(rng);
    const Isometry gh = g * h;
    const Isometry ginv = g.inverse();
    for (int k = 0; k < 5; ++k) {
      const Point p{u(rng), u(rng)};
      CHECK(distance(gh(p), g(h(p))) < 1e-12);
      CHECK(distance((g * ginv)(p), p) < 1e-12);
      CHECK(distance(ginv(g(p)), p) < 1e-12);
    }
  }
}

TEST_CASE("apply_isometry: full turn and double reflection are identities") {
  const Tiling rot3 = build_named("rot3");
  const Chain& tile = rot3.tiles[0];

  const Chain turned = apply_isometry(Isometry::rotation(kTwoPi, {0.4, -0.1}), tile);
  for (size_t i = 0; i < tile.size(); ++i) {
    CHECK(distance(turned.edge(i).start(), tile.edge(i).start()) < 1e-12);
    CHECK(distance(turned.edge(i).end(), tile.edge(i).end()) < 1e-12);
  }

  const Isometry mirror = Isometry::reflection({0.2, 0.3}, 1.1);
  const Chain twice = apply_isometry(mirror, apply_isometry(mirror, tile));
  for (size_t i = 0; i < tile.size(); ++i)
    CHECK(distance(twice.edge(i).midpoint(), tile.edge(i).midpoint()) < 1e-12);

  // Arc images keep radius and absolute sweep; reflections flip the sign.
  const Edge arc = unit_arc(0.3, kPi / 3);
  const Edge image = apply_isometry(mirror, arc);
  CHECK(image.arc_data().radius == doctest::Approx(1.0));
  CHECK(image.arc_data().sweep == doctest::Approx(-kPi / 3));
  CHECK(edge_length(image) == doctest::Approx(edge_length(arc)).epsilon(1e-14));
}

TEST_CASE("areas and lengths are isometry invariant") {
  std::mt19937_64 rng(99);
  const Tiling petal = build_named("petal12");
  for (int i = 0; i < 100; ++i) {
    const Isometry g = oracles::random_isometry(rng);
    const Chain& tile = petal.tiles[i % petal.tiles.size()];
    Chain image = apply_isometry(g, tile);
    if (g.reflect()) image = image.reversed();
    CHECK(std::abs(signed_area(image) - signed_area(tile)) < 1e-10);
    for (size_t e = 0; e < tile.size(); ++e) {
      const size_t src = g.reflect() ? tile.size() - 1 - e : e;
      CHECK(std::abs(edge_length(image.edge(e)) -
                     edge_length(tile.edge(src))) < 1e-12);
    }
  }
}

TEST_CASE("chain validation catches broken and self-crossing chains") {
  // Disconnected.
  CHECK_THROWS_AS(Chain::make({Edge::segment({0, 0}, {1, 0}),
                               Edge::segment({2, 0}, {3, 0})},
                              false),
                  Error);
  // Self-crossing bowtie.
  CHECK_THROWS_AS(Chain::make({Edge::segment({0, 0}, {1, 1}),
                               Edge::segment({1, 1}, {1, 0}),
                               Edge::segment({1, 0}, {0, 1}),
                               Edge::segment({0, 1}, {0, 0})},
                              true),
                  Error);
  // Region orientation.
  CHECK_THROWS_AS(Region::make(unit_square().reversed()), Error);
}

TEST_CASE("spindle: antipodal pair gives the unit disc") {
  const Region disc = spindle({-1, 0}, {1, 0}, 1.0);
  CHECK(chain_area(disc) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(disc.boundary().size() == 2);
}

TEST_CASE("spindle: unit chord on the unit circle") {
  const Region lens = spindle({0, 0}, {1, 0}, 1.0);
  const double s = spindle_arc_angle({0, 0}, {1, 0}, 1.0);
  CHECK(s == doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK(chain_area(lens) ==
        doctest::Approx(kPi / 3 - std::sin(kPi / 3)).epsilon(1e-12));
}

TEST_CASE("spindle: degenerate inputs are rejected") {
  CHECK_THROWS_AS(spindle({0.3, 0.2}, {0.3, 0.2}, 1.0), Error);
  CHECK_THROWS_AS(spindle({0, 0}, {3, 0}, 1.0), Error);
}

TEST_CASE("spindle area matches quasi-Monte-Carlo for s grid, r in {1,2}") {
  for (const double r : {1.0, 2.0}) {
    for (const double s : {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, kPi}) {
      const double d = 2.0 * r * std::sin(s / 2.0);
      const Point p{-d / 2, 0}, q{d / 2, 0};
      const Region lens = spindle(p, q, r);
      // Independent predicate: inside both generating discs.
      const double h = std::sqrt(std::max(0.0, r * r - d * d / 4));
      const Point c1{0, h}, c2{0, -h};
      auto inside = [&](Point x) {
        return distance(x, c1) <= r && distance(x, c2) <= r;
      };
      const oracles::Box box{-d / 2, -(r - h), d / 2, r - h};
      const double mc = oracles::qmc_area(box, inside, 2'000'000);
      const double closed = r * r * (s - std::sin(s));
      CHECK(std::abs(chain_area(lens) - closed) < 1e-12);
      CHECK(std::abs(closed - mc) < 2e-3);
    }
  }
}

TEST_CASE("arc_through picks the requested side") {
  const Edge left = Edge::arc_through({0, 0}, {1, 0}, 1.0, true);
  const Edge right = Edge::arc_through({0, 0}, {1, 0}, 1.0, false);
  CHECK(left.midpoint().y > 0.0);
  CHECK(right.midpoint().y < 0.0);
  CHECK(distance(left.start(), {0, 0}) < 1e-14);
  CHECK(distance(left.end(), {1, 0}) < 1e-14);
  CHECK(std::abs(left.arc_data().sweep) < kPi + 1e-12);
  CHECK(std::abs(right.arc_data().sweep) < kPi + 1e-12);
}
