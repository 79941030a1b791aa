// Minimum enclosing circle (Welzl) and region circumcircles.

#pragma once

#include <span>

#include "disctiler/geometry.hpp"

namespace disctiler {

// Unique smallest circle containing all points; determined by at most
// three support points.  Throws on empty input.
Circle min_enclosing_circle(std::span<const Point> points);

// Smallest circle enclosing the region: min_enclosing_circle over a
// densified boundary sample that includes arc axis-extreme points.
Circle region_circumcircle(const Region& r, int samples_per_edge = 64);

}  // namespace disctiler
