// Congruence of chains: canonical boundary signatures and recovery of
// witnessing isometries.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "disctiler/geometry.hpp"

namespace disctiler {

// Cyclic feature sequence (edge kind, length, signed curvature, exterior
// turn angle at the following joint), canonicalized over cyclic
// rotations, traversal reversals and global curvature-sign flips so that
// isometric chains - including mirror images - compare equal.
class Signature {
 public:
  // Feature fields quantized to multiples of `quantum` before the
  // lexicographic minimization.
  static Signature of(const Chain& c, double quantum = 1e-12);

  // Equal canonical forms, or any variant alignment within one grid cell
  // per field (values within noise of a cell boundary may round apart).
  bool operator==(const Signature& o) const;
  bool operator!=(const Signature& o) const { return !(*this == o); }
  bool operator<(const Signature& o) const { return canon_ < o.canon_; }

  // kind, length, curvature, turn per feature (integer grid units).
  const std::vector<std::array<std::int64_t, 4>>& canonical() const {
    return canon_;
  }

 private:
  std::vector<std::array<std::int64_t, 4>> canon_;
  std::vector<std::array<std::int64_t, 4>> base_;
  bool closed_ = false;
};

Signature signature(const Chain& c, double quantum = 1e-12);

// All isometries g with g(a) = b as point sets, verified on every edge
// endpoint and midpoint within eps.  Candidates come from aligning
// features of a with features of b in both traversal orientations and
// both handedness choices.
std::vector<Isometry> find_congruence_all(const Chain& a, const Chain& b,
                                          double eps = 1e-6);

// The candidate minimizing (|rotation|, |translation|, reflect)
// lexicographically, or nullopt when the chains are not congruent.
std::optional<Isometry> find_congruence(const Chain& a, const Chain& b,
                                        double eps = 1e-6);

}  // namespace disctiler
