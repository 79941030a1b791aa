// JSON document format for tilings and multicurves, and SVG rendering.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "disctiler/geometry.hpp"
#include "disctiler/tiling.hpp"

namespace disctiler {

// One schema serves both kinds; "tiles" holds closed boundaries,
// "members" open ones.
struct Document {
  enum class Kind { Tiling, Multicurve };
  Kind kind = Kind::Tiling;
  std::vector<Chain> boundaries;
  Tolerance eps;         // document defaults merged over library defaults
  bool eps_present = false;

  Tiling tiling() const { return Tiling{boundaries, eps}; }
};

// Strict parse: unknown fields, malformed numbers and degenerate edges
// are errors naming the offending path.
Document parse_document(std::string_view text);

std::string serialize_tiling(const Tiling& t);
std::string serialize_multicurve(const std::vector<Chain>& members);

// Deterministic SVG: viewBox [-1.05 -1.05 2.1 2.1], one filled path per
// tile, stroked rim circle.
std::string render_svg(const std::vector<Chain>& tiles);

}  // namespace disctiler
