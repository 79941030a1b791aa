// Acceptance suite: one check per release criterion, each printed as a
// single PASS/FAIL line.  Exits nonzero if any criterion fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "disctiler/catalog.hpp"
#include "disctiler/enclosing.hpp"
#include "disctiler/signature.hpp"
#include "disctiler/tiling.hpp"
#include "support/oracles.hpp"

using namespace disctiler;

namespace {

struct Criterion {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& why) {
    if (!ok && pass) {
      pass = false;
      detail = why;
    }
  }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. All five named tilings pass validate at the default tolerances.
Criterion catalog_validity() {
  Criterion c;
  double worst_defect = 0.0;
  for (const std::string& name : catalog_names()) {
    const Tiling t = build_named(name);
    const ValidationReport rep = validate(t);
    c.require(rep.pass(), name + " failed validate");
    c.require(rep.area_defect <= 1e-7,
              name + " area defect " + fmt(rep.area_defect));
    for (size_t j = 0; j < t.tiles.size(); ++j)
      c.require(rep.witnesses[j].has_value(),
                name + " missing witness isometry for tile " +
                    std::to_string(j));
    worst_defect = std::max(worst_defect, rep.area_defect);
  }
  c.detail = "5 tilings, worst area defect " + fmt(worst_defect);
  return c;
}

// 2. Center census: petal12 6-of-12 with no interior containment;
//    rot2/rot3 all tiles contain O.
Criterion center_census() {
  Criterion c;
  const CenterCensus petal = center_containment(build_named("petal12"));
  c.require(petal.contains() == 6, "petal12 contains " +
                                       std::to_string(petal.contains()));
  c.require(petal.interior_count == 0,
            "petal12 interior count " + std::to_string(petal.interior_count));
  for (const char* name : {"rot2", "rot3"}) {
    const Tiling t = build_named(name);
    const CenterCensus census = center_containment(t);
    c.require(census.contains() == int(t.tiles.size()),
              std::string(name) + " has tiles missing O");
  }
  c.detail = "petal12: 6 of 12, 0 interior; rot2/rot3: all";
  return c;
}

// 3. 500 seeded generators x n in {1,2,3}: validate passes, symmetry is
//    (n, true), no tile misses O.
Criterion rotational_generation_suite() {
  Criterion c;
  int runs = 0;
  for (int n = 1; n <= 3 && c.pass; ++n) {
    for (std::uint64_t seed = 0; seed < 500 && c.pass; ++seed) {
      const std::string label =
          "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
      try {
        const GeneratorCurve g = random_generator(seed, n, 1 + int(seed % 8));
        const Tiling t = build_rotgen(g, n);
        const ValidationReport rep = validate(t);
        c.require(rep.pass(), label + " failed validate");
        const SymmetryInfo s = symmetry_order(t);
        c.require(s.order == n && s.rotationally_generated,
                  label + " symmetry (" + std::to_string(s.order) + "," +
                      (s.rotationally_generated ? "true" : "false") + ")");
        const CenterCensus census = center_containment(t);
        c.require(census.outside_count == 0, label + " has a tile missing O");
        ++runs;
      } catch (const Error& e) {
        c.require(false, label + ": " + e.what());
      }
    }
  }
  c.detail = std::to_string(runs) + " tilings, zero counterexamples";
  return c;
}

// 4. Spindle area r^2(s - sin s) against 1e7-sample Monte Carlo; the
//    s = pi case must equal pi exactly (1e-9).  The alternative constant
//    (s - sin s)/4 is documented as inconsistent with the measurement.
Criterion spindle_area() {
  Criterion c;
  double worst = 0.0;
  double alt_defect = 1e9;
  std::uint64_t seed = 1000;
  for (const double s : {kPi / 6, kPi / 3, kPi / 2, 2 * kPi / 3, kPi}) {
    const double d = 2.0 * std::sin(s / 2.0);
    const Region lens = spindle({-d / 2, 0}, {d / 2, 0}, 1.0);
    const double area = chain_area(lens);
    const double h = std::sqrt(std::max(0.0, 1.0 - d * d / 4));
    const Point c1{0, h}, c2{0, -h};
    const auto inside = [&](Point x) {
      return distance(x, c1) <= 1.0 && distance(x, c2) <= 1.0;
    };
    const oracles::Box box{-d / 2, -(1.0 - h), d / 2, 1.0 - h};
    const double mc = oracles::mc_area(box, inside, 10'000'000, seed++);
    c.require(std::abs(area - mc) <= 2e-3,
              "s=" + fmt(s) + ": |area - MC| = " + fmt(std::abs(area - mc)));
    c.require(std::abs(area - (s - std::sin(s))) <= 1e-12,
              "s=" + fmt(s) + ": closed form mismatch");
    worst = std::max(worst, std::abs(area - mc));
    // The alternative constant (s - sin s)/4 must disagree with the
    // measurement wherever the area is nonzero.
    alt_defect =
        std::min(alt_defect, std::abs(mc - (s - std::sin(s)) / 4.0));
  }
  const Region disc = spindle({-1, 0}, {1, 0}, 1.0);
  c.require(std::abs(chain_area(disc) - kPi) <= 1e-9,
            "s=pi disc area " + fmt(chain_area(disc)));
  c.require(alt_defect > 1e-2,
            "(s-sin s)/4 unexpectedly matches the measurement");
  c.detail = "worst |area-MC| " + fmt(worst) +
             "; (s-sin s)/4 variant off by >= " + fmt(alt_defect);
  return c;
}

// 5. Arc-equation scan empty for both variants at delta = 1e-9.
Criterion arc_equation_scan() {
  Criterion c;
  const auto base = scan_arc_equation(200, 2000, 1e-9, false);
  const auto corrected = scan_arc_equation(200, 2000, 1e-9, true);
  c.require(base.empty(),
            "base variant has " + std::to_string(base.size()) + " hits");
  c.require(corrected.empty(), "corrected variant has " +
                                   std::to_string(corrected.size()) + " hits");
  c.detail = "k <= 200, n <= 2000: no solutions in either variant";
  return c;
}

// 6. Welzl vs the O(n^4) oracle on 1000 seeded 20-point sets.
Criterion enclosing_circle_oracle() {
  Criterion c;
  std::mt19937_64 rng(123456);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int set = 0; set < 1000 && c.pass; ++set) {
    std::vector<Point> pts;
    while (pts.size() < 20) {
      const Point p{u(rng), u(rng)};
      if (p.norm() <= 1.0) pts.push_back(p);
    }
    const Circle fast = min_enclosing_circle(pts);
    const Circle brute = oracles::brute_force_mec(pts);
    const double dr = std::abs(fast.radius - brute.radius);
    const double dc = distance(fast.center, brute.center);
    worst = std::max({worst, dr, dc});
    c.require(dr <= 1e-9 && dc <= 1e-9,
              "set " + std::to_string(set) + ": dr=" + fmt(dr) +
                  " dc=" + fmt(dc));
  }
  c.detail = "1000 sets, worst deviation " + fmt(worst);
  return c;
}

// 7. Equidecomposability matches the exhaustive oracle on 200 instances;
//    rot3 tile boundaries pairwise decide true.
Criterion equidecomposability() {
  Criterion c;
  std::mt19937_64 rng(777777);
  auto realize = [](const std::vector<oracles::GridPiece>& ps,
                    double offset) {
    std::vector<Chain> members;
    for (size_t i = 0; i < ps.size(); ++i) {
      const Point at{offset + 10.0 * double(i), 0.0};
      const double len = ps[i].len / 8.0;
      if (ps[i].klass == 0)
        members.push_back(
            Chain::make({Edge::segment(at, at + Point{len, 0.0})}, false));
      else
        members.push_back(Chain::make(
            {Edge::arc(at, ps[i].klass / 8.0, 0.0,
                       len / (ps[i].klass / 8.0))},
            false));
    }
    return Multicurve::unchecked(std::move(members));
  };
  int agreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int total = 6 + int(rng() % 18);
    std::vector<oracles::GridPiece> fs;
    int left = total;
    while (left > 0 && fs.size() < 6) {
      const int take = int(fs.size()) == 5 ? left : 1 + int(rng() % left);
      fs.push_back({int(rng() % 3) * 8, take});
      left -= take;
    }
    std::vector<oracles::GridPiece> gs;
    int per_class[3] = {0, 0, 0};
    for (const auto& p : fs) per_class[p.klass / 8] += p.len;
    for (int k = 0; k < 3; ++k) {
      int rest = per_class[k];
      if (rest <= 0) continue;
      if (rest > 1) {
        const int take = 1 + int(rng() % (rest - 1));
        gs.push_back({k * 8, take});
        rest -= take;
      }
      gs.push_back({k * 8, rest});
    }
    if (trial % 2 == 1) gs.push_back({8, 1 + int(rng() % 4)});
    const bool oracle = oracles::equidecomp_oracle(fs, gs);
    const bool impl =
        equidecomposable(realize(fs, 0.0), realize(gs, 1000.0)).decision;
    c.require(oracle == impl, "trial " + std::to_string(trial) +
                                  ": oracle/implementation disagree");
    agreements += oracle == impl ? 1 : 0;
  }
  const Tiling rot3 = build_named("rot3");
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      c.require(equidecomposable(Multicurve::unchecked({rot3.tiles[i]}),
                                 Multicurve::unchecked({rot3.tiles[j]}))
                    .decision,
                "rot3 boundaries " + std::to_string(i) + "," +
                    std::to_string(j) + " decided false");
  c.detail = std::to_string(agreements) +
             "/200 oracle agreements; rot3 boundaries pairwise true";
  return c;
}

// 8. Congruence: 500 true pairs and 500 perturbed pairs at eps = 1e-6.
Criterion congruence_controls() {
  Criterion c;
  std::mt19937_64 rng(24680);
  int false_neg = 0, false_pos = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto feats = oracles::random_features(rng, 2 + int(rng() % 5));
    const Chain a = oracles::chain_from_features({0, 0}, 0.15, feats);
    const Isometry g = oracles::random_isometry(rng);
    const bool perturb = trial % 2 == 1;
    if (perturb) feats[rng() % feats.size()].length += 1e-3;
    const Chain b =
        apply_isometry(g, oracles::chain_from_features({0, 0}, 0.15, feats));
    const bool found = find_congruence(a, b, 1e-6).has_value();
    if (!perturb && !found) ++false_neg;
    if (perturb && found) ++false_pos;
  }
  c.require(false_neg == 0,
            std::to_string(false_neg) + " false negatives");
  c.require(false_pos == 0,
            std::to_string(false_pos) + " false positives");
  c.detail = "1000 pairs: 0 false negatives, 0 false positives";
  return c;
}

// 9. Structural diagnostics over the corpus: connected rim sets; one
//    interior triple point per 3-tiling; separation for 2-tilings.
Criterion structure_diagnostics() {
  Criterion c;
  std::vector<std::pair<std::string, Tiling>> corpus;
  for (const std::string& name : catalog_names())
    corpus.emplace_back(name, build_named(name));
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      corpus.emplace_back(
          "fuzz n=" + std::to_string(n) + " seed=" + std::to_string(seed),
          build_rotgen(random_generator(seed, n, 1 + int(seed % 8)), n));

  int two = 0, three = 0;
  for (const auto& [label, t] : corpus) {
    c.require(validate(t).pass(), label + " failed validate");
    const BoundaryArcReport rim = boundary_arcs(t);
    c.require(rim.all_connected, label + " has a disconnected rim set");
    c.require(std::abs(rim.total_length - kTwoPi) < 1e-9,
              label + " rim arcs do not partition S^1");
    if (t.tiles.size() == 2) {
      ++two;
      try {
        circumdisc_separation(Region::make(t.tiles[0]),
                              Region::make(t.tiles[1]));
      } catch (const Error& e) {
        c.require(false, label + " separation failed: " + e.what());
      }
    }
    if (t.tiles.size() == 3) {
      ++three;
      int interior = 0;
      for (const TriplePoint& tp : triple_points(t))
        interior += tp.interior ? 1 : 0;
      c.require(interior == 1, label + " has " + std::to_string(interior) +
                                   " interior triple points");
    }
  }
  c.detail = std::to_string(corpus.size()) + " tilings (" +
             std::to_string(two) + " two-tile, " + std::to_string(three) +
             " three-tile)";
  return c;
}

// 10. Convexity bookkeeping identity on the catalog.
Criterion convexity_identity() {
  Criterion c;
  double worst = 0.0;
  for (const std::string& name : catalog_names()) {
    const Tiling t = build_named(name);
    double convex = 0.0, concave = 0.0;
    for (const Chain& tile : t.tiles) {
      const ConvexityProfile p = convexity_profile(Region::make(tile));
      convex += p.convex.arc_total(1.0);
      concave += p.concave.arc_total(1.0);
    }
    const double defect = std::abs(convex - concave - kTwoPi);
    worst = std::max(worst, defect);
    c.require(defect <= 1e-7, name + " identity defect " + fmt(defect));
  }
  c.detail = "catalog identity defect <= " + fmt(worst);
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Criterion()> run;
  };
  const std::vector<Entry> criteria{
      {"catalog validity", catalog_validity},
      {"center census", center_census},
      {"rotational generation suite", rotational_generation_suite},
      {"spindle area vs Monte Carlo", spindle_area},
      {"arc-equation scan", arc_equation_scan},
      {"minimum enclosing circle oracle", enclosing_circle_oracle},
      {"equidecomposability oracle", equidecomposability},
      {"congruence controls", congruence_controls},
      {"rim and meeting-point diagnostics", structure_diagnostics},
      {"convexity bookkeeping identity", convexity_identity},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Criterion result;
    try {
      result = criteria[i].run();
    } catch (const std::exception& e) {
      result.pass = false;
      result.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %2zu [%s]: %s — %s\n", i + 1,
                result.pass ? "PASS" : "FAIL", criteria[i].name,
                result.pass ? result.detail.c_str()
                            : result.detail.c_str());
    if (!result.pass) ++failures;
  }
  if (failures > 0)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures == 0 ? 0 : 1;
}
