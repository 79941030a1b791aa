// Closed-form pairwise edge intersection for segments and circular arcs.

#pragma once

#include <vector>

#include "disctiler/geometry.hpp"

namespace disctiler {

struct EdgeIntersection {
  // Isolated intersection / tangency points.
  std::vector<Point> points;
  // Shared sub-edges where the two supports coincide; oriented along `a`.
  std::vector<Edge> overlaps;

  bool empty() const { return points.empty() && overlaps.empty(); }
};

// Circle-circle / line-circle / line-line solutions clipped to the edge
// parameter ranges.  Coincident supports are reported as overlaps.
EdgeIntersection edge_intersect(const Edge& a, const Edge& b,
                                const Tolerance& tol = {});

}  // namespace disctiler
