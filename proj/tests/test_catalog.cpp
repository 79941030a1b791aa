#include <doctest.h>

#include <cmath>

#include "disctiler/catalog.hpp"
#include "disctiler/io.hpp"
#include "disctiler/signature.hpp"
#include "disctiler/tiling.hpp"

using namespace disctiler;

TEST_CASE("build_rotgen: straight radius, n = 4 quarter discs") {
  const Chain radius = Chain::make({Edge::segment({0, 0}, {1, 0})}, false);
  const Tiling t = build_rotgen(make_generator(radius, 4), 4);
  REQUIRE(t.tiles.size() == 4);
  for (const Chain& c : t.tiles)
    CHECK(signed_area(c) == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(validate(t).pass());
}

TEST_CASE("build_rotgen: 60-degree unit arc generator, n = 6") {
  // Unit arc from O to (1,0) with chord 1, as in the figure's third panel
  // but with six copies.
  const Chain gen = Chain::make(
      {Edge::arc(polar(-kPi / 3), 1.0, kTwoPi / 3, -kPi / 3)}, false);
  REQUIRE(distance(gen.start(), {0, 0}) < 1e-15);
  REQUIRE(distance(gen.end(), {1, 0}) < 1e-15);
  const Tiling t = build_rotgen(make_generator(gen, 6), 6);
  CHECK(t.tiles.size() == 6);
  CHECK(validate(t).pass());
  const SymmetryInfo s = symmetry_order(t);
  CHECK(s.order == 6);
  CHECK(s.rotationally_generated);
}

TEST_CASE("build_rotgen: n = 1 yields the full disc") {
  const Chain radius = Chain::make({Edge::segment({0, 0}, {0, 1})}, false);
  const Tiling t = build_rotgen(make_generator(radius, 1), 1);
  REQUIRE(t.tiles.size() == 1);
  CHECK(signed_area(t.tiles[0]) == doctest::Approx(kPi).epsilon(1e-12));
  CHECK(validate(t).pass());
  const SymmetryInfo s = symmetry_order(t);
  CHECK(s.order == 1);
  CHECK(s.rotationally_generated);
}

TEST_CASE("generator validation rejects copies that cross") {
  // Angular span 2.3 rad > 2*pi/3 with a deep dip: the rotated copy's
  // middle chord crosses this generator's outward leg.
  const Chain crossing = Chain::make(
      {Edge::segment({0, 0}, polar(0.0, 0.35)),
       Edge::segment(polar(0.0, 0.35), polar(2.3, 0.2)),
       Edge::segment(polar(2.3, 0.2), polar(2.3, 1.0))},
      false);
  CHECK_THROWS_AS(make_generator(crossing, 3), Error);
  // The same curve is a fine generator for a full-disc rotation count.
  CHECK_NOTHROW(make_generator(crossing, 1));

  // A curve that dips below its nominal sector but still fits a rotated
  // closed sector of angle 2*pi/3 is legitimate.
  const Chain wander = Chain::make(
      {Edge::segment({0, 0}, polar(-0.8, 0.6)),
       Edge::segment(polar(-0.8, 0.6), {1, 0})},
      false);
  CHECK_NOTHROW(make_generator(wander, 3));
  CHECK(validate(build_rotgen(make_generator(wander, 3), 3)).pass());

  // Not anchored at O.
  CHECK_THROWS_AS(
      make_generator(Chain::make({Edge::segment({0.1, 0}, {1, 0})}, false), 3),
      Error);
  // Not reaching the rim.
  CHECK_THROWS_AS(
      make_generator(Chain::make({Edge::segment({0, 0}, {0.9, 0})}, false), 3),
      Error);
}

TEST_CASE("catalog: all five names build, validate, and nothing else") {
  const std::vector<std::string> names = catalog_names();
  REQUIRE(names == std::vector<std::string>{"rot2", "rot3", "hw12", "petal12",
                                            "hw12flip"});
  for (const std::string& name : names) {
    const Tiling t = build_named(name);
    CHECK(validate(t).pass());
  }
  CHECK_THROWS_AS(build_named("rot5"), Error);
}

TEST_CASE("catalog tile counts and areas") {
  CHECK(build_named("rot2").tiles.size() == 2);
  CHECK(build_named("rot3").tiles.size() == 3);
  for (const char* name : {"hw12", "petal12", "hw12flip"}) {
    const Tiling t = build_named(name);
    REQUIRE(t.tiles.size() == 12);
    for (const Chain& tile : t.tiles)
      CHECK(signed_area(tile) == doctest::Approx(kPi / 12).epsilon(1e-12));
  }
  for (const Chain& tile : build_named("rot2").tiles)
    CHECK(signed_area(tile) == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("builder argument validation") {
  const Chain radius = Chain::make({Edge::segment({0, 0}, {1, 0})}, false);
  CHECK_THROWS_AS(build_rotgen(make_generator(radius, 1), 0), Error);
  CHECK_THROWS_AS(random_generator(1, 0, 3), Error);
  CHECK_THROWS_AS(random_generator(1, 3, 0), Error);
  CHECK_THROWS_AS(random_generator(1, 3, 9), Error);
}

TEST_CASE("petal12 witnesses mix direct and reflective isometries") {
  const Tiling t = build_named("petal12");
  int direct = 0, reflective = 0;
  for (size_t j = 1; j < t.tiles.size(); ++j) {
    const auto g = find_congruence(t.tiles[0], t.tiles[j], 1e-6);
    REQUIRE(g.has_value());
    (g->reflect() ? reflective : direct)++;
  }
  CHECK(direct > 0);
  CHECK(reflective > 0);
}

TEST_CASE("random_generator: determinism and the single-edge case") {
  const GeneratorCurve a = random_generator(1, 3, 1);
  const GeneratorCurve b = random_generator(1, 3, 1);
  CHECK(a.chain.size() == 1);
  CHECK(serialize_multicurve({a.chain}) == serialize_multicurve({b.chain}));
  CHECK(validate(build_rotgen(a, 3)).pass());

  const GeneratorCurve c = random_generator(17, 2, 6);
  const GeneratorCurve d = random_generator(17, 2, 6);
  CHECK(serialize_multicurve({c.chain}) == serialize_multicurve({d.chain}));
  CHECK(serialize_multicurve({c.chain}) != serialize_multicurve({a.chain}));
}

TEST_CASE("build_rotgen over fuzzed generators: symmetry and containment") {
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
      const Tiling t =
          build_rotgen(random_generator(seed, n, 1 + int(seed % 8)), n);
      const SymmetryInfo s = symmetry_order(t);
      CHECK(s.order == n);
      CHECK(s.rotationally_generated);
      const CenterCensus c = center_containment(t);
      CHECK(c.contains() == int(t.tiles.size()));
    }
  }
}

TEST_CASE("scan_arc_equation: empty at tight delta, near misses at loose") {
  CHECK(scan_arc_equation(60, 600, 1e-9).empty());
  CHECK(scan_arc_equation(60, 600, 1e-9, true).empty());

  const auto near = scan_arc_equation(10, 50, 0.05);
  CHECK(!near.empty());
  for (const ArcEquationHit& h : near) {
    const double recomputed =
        std::abs(std::sin(kTwoPi / h.k) - kPi * (2.0 / h.k - 4.0 / h.n));
    CHECK(recomputed == doctest::Approx(h.residual).epsilon(1e-15));
    CHECK(h.residual <= 0.05);
    CHECK(h.k >= 3);
    CHECK(h.n >= 1);
  }

  // Determinism: identical list on a second run.
  const auto again = scan_arc_equation(10, 50, 0.05);
  REQUIRE(near.size() == again.size());
  for (size_t i = 0; i < near.size(); ++i) {
    CHECK(near[i].k == again[i].k);
    CHECK(near[i].n == again[i].n);
    CHECK(near[i].residual == again[i].residual);
  }
}

TEST_CASE("scan_arc_equation boundary: k = 2 solves but is excluded") {
  // sin(pi) = 0 and 2/2 - 4/4 = 0: the k = 2, n = 4 point satisfies the
  // equation, which is why the scan's domain starts at k = 3.
  CHECK(std::abs(std::sin(kTwoPi / 2) - kPi * (2.0 / 2 - 4.0 / 4)) < 1e-15);
  CHECK_THROWS_AS(scan_arc_equation(2, 10, 1e-9), Error);
}
