// Construction of the named disc tilings, rotationally generated
// families, fuzzing generators, and the arc-length equation scan.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "disctiler/geometry.hpp"
#include "disctiler/tiling.hpp"

namespace disctiler {

// Simple chain from O to a point of S^1 whose rotated copies by 2*pi*k/n
// meet only in shared endpoints.
struct GeneratorCurve {
  Chain chain;
  double sector_angle = kTwoPi;  // 2*pi/n the curve was validated for
};

// Validates the generator invariants for rotation count n; throws.
GeneratorCurve make_generator(Chain chain, int n, const Tolerance& tol = {});

// n tiles, tile j bounded by the generator, its rotation by 2*pi(j+1)/n,
// and the rim arc between their endpoints on S^1.
Tiling build_rotgen(const GeneratorCurve& g, int n, const Tolerance& tol = {});

// Named constructions: "rot2", "rot3", "hw12", "petal12", "hw12flip".
// Monohedrality is verified at build time; a defect throws.
Tiling build_named(std::string_view name, const Tolerance& tol = {});
std::vector<std::string> catalog_names();

// Deterministic-in-seed generator chain of `complexity` edges, monotone
// in polar angle within the sector [0, 2*pi/n); resamples internally
// until the generator invariants hold.
GeneratorCurve random_generator(std::uint64_t seed, int n, int complexity,
                                const Tolerance& tol = {});

struct ArcEquationHit {
  int k = 0;
  long long n = 0;
  double residual = 0.0;
};

// Scans sin(2*pi/k) = pi*(2/k - 4/n) over 3 <= k <= k_max, 1 <= n <= n_max
// and reports near-solutions with residual <= delta.  With `corrected`
// the variant sin(2*pi/k) = pi*(2/k - 2/n) is scanned instead, matching
// the spindle area r^2(s - sin s).
std::vector<ArcEquationHit> scan_arc_equation(int k_max, long long n_max,
                                              double delta,
                                              bool corrected = false);

}  // namespace disctiler
