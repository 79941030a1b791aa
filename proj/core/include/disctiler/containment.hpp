// Point-in-region classification by ray casting with degeneracy redraws.

#pragma once

#include <optional>

#include "disctiler/geometry.hpp"

namespace disctiler {

enum class Side { Inside, Boundary, Outside };

// Boundary iff the distance from p to the boundary is <= tol.len; else
// crossing parity of a ray from p.  The ray direction is re-drawn from a
// fixed deterministic sequence whenever it passes near an edge endpoint
// or a tangency.  `ray_angle` overrides the first direction tried.
Side point_in_region(const Region& r, Point p, const Tolerance& tol = {},
                     std::optional<double> ray_angle = {});

}  // namespace disctiler
