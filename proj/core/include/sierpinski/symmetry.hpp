#pragma once

// Fixed-point sets of the 16 isometries of D_p.

#include <cstddef>
#include <string>
#include <vector>

#include "sierpinski/pillow.hpp"

namespace sierpinski {

struct FixedSetClass {
  enum class Tag { Empty, Finite, Cantor, JordanCurveO, All };

  Tag tag = Tag::Empty;
  std::size_t count = 0;          // number of points when Finite
  std::vector<PillowPoint> points;  // the points when Finite
  std::string certificate;        // human-readable justification

  /// "empty", "finite 2", "cantor", "jordan-curve-O", "all"
  std::string str() const;
};

/// Fixed-point set of g on D_p. The fixed locus of each isometry is affine
/// on each face and is solved exactly; its intersection with D_p is then
/// decided by the digit criterion. For segment loci, `resolution` is the
/// depth up to which the Cantor splitting pattern is certified (>= 3).
FixedSetClass fixed_set_classify(const IsometryId& g, long p, unsigned resolution);

}  // namespace sierpinski
