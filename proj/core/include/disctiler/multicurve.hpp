// Multicurves (families of arc/segment chains) and scissors congruence
// of their length profiles.

#pragma once

#include <span>
#include <utility>
#include <vector>

#include "disctiler/geometry.hpp"

namespace disctiler {

// Finite family of simple chains where any plane point lies on at most
// one member or is a shared endpoint of exactly two.
class Multicurve {
 public:
  static Multicurve make(std::vector<Chain> members, const Tolerance& tol = {});
  static Multicurve unchecked(std::vector<Chain> members);

  std::span<const Chain> members() const { return members_; }
  size_t size() const { return members_.size(); }
  const Chain& member(size_t i) const { return members_[i]; }

 private:
  std::vector<Chain> members_;
};

// Total length per curvature class: one bucket for segments, one per arc
// radius (unsigned: both bending senses are congruent via a reflection).
class LengthProfile {
 public:
  void add_segment(double len) { segment_ += len; }
  void add_arc(double radius, double len, double radius_tol = 1e-9);

  double segment_total() const { return segment_; }
  double arc_total(double radius, double radius_tol = 1e-9) const;
  // (radius, total) sorted by radius.
  const std::vector<std::pair<double, double>>& arc_classes() const {
    return arcs_;
  }

  bool approx_equal(const LengthProfile& o, double eps) const;
  LengthProfile minus(const LengthProfile& o, double radius_tol = 1e-9) const;

 private:
  double segment_ = 0.0;
  std::vector<std::pair<double, double>> arcs_;
};

LengthProfile length_profile(const Multicurve& m, const Tolerance& tol = {});

// A sub-edge of one member, with its location in the member recorded.
struct WitnessPiece {
  int member = 0;
  int edge = 0;
  double t0 = 0.0;
  double t1 = 1.0;
  Edge geometry;
};

struct EquidecompResult {
  bool decision = false;
  LengthProfile f_profile;
  LengthProfile g_profile;
  // Congruent piece pairs forming the bijection F' -> G'; empty when the
  // decision is negative.
  std::vector<std::pair<WitnessPiece, WitnessPiece>> pieces;
};

// Two arc/segment multicurves are equidecomposable iff their per-class
// total lengths agree: equal-length pieces of one class are congruent,
// so a greedy cut-and-match yields the witness partitions.
EquidecompResult equidecomposable(const Multicurve& f, const Multicurve& g,
                                  double eps = 1e-9,
                                  const Tolerance& tol = {});

// Decision for (f minus f_sub, g minus g_sub).  f_sub members must match
// members of f (and likewise for g), otherwise throws.
EquidecompResult subtract_decomposition(const Multicurve& f,
                                        const Multicurve& f_sub,
                                        const Multicurve& g,
                                        const Multicurve& g_sub,
                                        double eps = 1e-9,
                                        const Tolerance& tol = {});

}  // namespace disctiler
