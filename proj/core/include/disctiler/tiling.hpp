// Validation and diagnostics for claimed tilings of the closed unit disc.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disctiler/containment.hpp"
#include "disctiler/geometry.hpp"
#include "disctiler/multicurve.hpp"

namespace disctiler {

// Tiles are held as closed chains so that structurally broken inputs can
// be diagnosed by validate() instead of rejected at construction.
struct Tiling {
  std::vector<Chain> tiles;
  Tolerance tol;
};

struct ValidationReport {
  bool coverage_ok = false;
  bool disjoint_ok = false;
  bool monohedral_ok = false;
  bool jordan_ok = false;
  double area_defect = 0.0;  // |sum of tile areas - pi|
  double rim_defect = 0.0;   // rim angle left uncovered
  // witnesses[j] maps tile 0 onto tile j (identity at j = 0).
  std::vector<std::optional<Isometry>> witnesses;
  std::vector<std::string> failures;

  bool pass() const {
    return coverage_ok && disjoint_ok && monohedral_ok && jordan_ok;
  }
};

// Coverage (area sum and rim arcs), pairwise interior disjointness,
// monohedrality with explicit witness isometries, and per-tile Jordan
// structure.  Structural defects are reported, not thrown.
ValidationReport validate(const Tiling& t);

// One maximal arc of S^1 covered by a tile; length 0 is a point contact.
struct RimArc {
  double start_angle = 0.0;
  double length = 0.0;
};

struct TileRim {
  std::vector<RimArc> arcs;
  double total_length = 0.0;
  bool connected = true;  // at most one rim component
};

struct BoundaryArcReport {
  std::vector<TileRim> per_tile;
  double total_length = 0.0;
  bool all_connected = true;
};

// The sets S_i = D_i intersect S^1; flags tiles whose rim set is
// disconnected.
BoundaryArcReport boundary_arcs(const Tiling& t);

struct TriplePoint {
  Point location;
  std::vector<int> tiles;
  bool interior = false;
};

// All points where at least three tile boundaries meet, clustered
// within tolerance; sorted by coordinates for determinism.
std::vector<TriplePoint> triple_points(const Tiling& t);

struct CenterCensus {
  std::vector<Side> per_tile;
  int interior_count = 0;
  int boundary_count = 0;
  int outside_count = 0;
  int contains() const { return interior_count + boundary_count; }
};

// Closed containment of the disc center in each tile.
CenterCensus center_containment(const Tiling& t);

struct SymmetryInfo {
  int order = 1;                       // largest m | n with 2*pi/m symmetry
  bool rotationally_generated = false; // 2*pi/n cyclically permutes tiles
};

SymmetryInfo symmetry_order(const Tiling& t);

enum class CongruenceKind { LineReflection, PointReflection, Other };

struct SeparationReport {
  Point p, q;  // endpoints of the separating diameter
  std::vector<std::pair<Isometry, CongruenceKind>> congruences;
};

// For two congruent, non-overlapping regions sharing circumcircle S^1:
// a diameter separating their rim sets, and the classification of every
// congruence between them as reflection in that diameter's line or in O.
// Throws naming the failed precondition otherwise.
SeparationReport circumdisc_separation(const Region& d1, const Region& d2,
                                       const Tolerance& tol = {});

struct ConvexityProfile {
  LengthProfile convex;   // arcs bulging away from the region interior
  LengthProfile concave;  // arcs bulging into it
};

// Classifies every arc edge by probing the midpoint normal against the
// region interior; totals per radius class.
ConvexityProfile convexity_profile(const Region& d, const Tolerance& tol = {});

}  // namespace disctiler
