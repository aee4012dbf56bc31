#pragma once

// Membership and peripheral structure for the square carpet S_p, its back
// copy, the double D_p, the middle-digit Cantor set, and the weak tangents
// at a corner (W) and at the diagonal point of the middle circle (W~).

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sierpinski/exactnum.hpp"
#include "sierpinski/pillow.hpp"
#include "sierpinski/tiling.hpp"

namespace sierpinski {

enum class CarpetSpace { SpFront, SpBack, Dp };

std::string_view to_string(CarpetSpace s);
/// "sp" / "sp-front", "sp-back", "dp".
CarpetSpace parse_carpet_space(std::string_view text);

/// The middle digit (p-1)/2.
Digit middle_digit(long p);

/// (x, y) in the unit square belongs to S_p: some pair of base-p expansions
/// never shows the digit pair (m, m).
bool in_square_carpet(long p, const Rational& x, const Rational& y);

/// For points outside S_p: the level of the removed square containing the
/// point (first position where every expansion pair has hit (m, m)).
std::optional<std::size_t> removal_level(long p, const Rational& x, const Rational& y);

bool member(long p, CarpetSpace space, const PillowPoint& q);

/// t in [0,1] has an expansion avoiding the middle digit.
bool cantor_member(long p, const Rational& t);

struct ProductCheck {
  bool ok = true;
  std::size_t checked = 0;  // pairs with both coordinates in C_p
  std::optional<std::pair<Rational, Rational>> witness;
};

/// Every sampled pair with both coordinates in C_p lies in S_p.
ProductCheck cp_product_subset_check(long p, const std::vector<std::pair<Rational, Rational>>& samples);

/// Outer circle O, or the boundary of the middle square removed from a good
/// parent tile of level k-1 (birth level k).
struct PeripheralCircleId {
  CarpetSpace ambient = CarpetSpace::SpFront;
  bool outer = false;
  Face face = Face::Front;
  unsigned level = 0;  // birth level k >= 1
  Index i = 0;         // parent tile indices at level k-1
  Index j = 0;

  static PeripheralCircleId outer_circle(CarpetSpace ambient) { return {ambient, true}; }
  static PeripheralCircleId removed(CarpetSpace ambient, Face face, unsigned level, Index i, Index j) {
    return {ambient, false, face, level, i, j};
  }

  /// "outer" or "removed:front:k:i,j"
  std::string str() const;
  static PeripheralCircleId parse(std::string_view text, CarpetSpace ambient);

  TileAddress parent() const { return {face, level - 1, i, j}; }

  friend bool operator==(const PeripheralCircleId&, const PeripheralCircleId&) = default;
};

/// Corner coordinates [x0,x1] x [y0,y1] of the removed square bounded by c.
struct SquareBounds {
  Rational x0, x1, y0, y1;
};
SquareBounds removed_square(long p, const PeripheralCircleId& c);

/// Outer first (for S_p ambients), then removed circles by birth level and
/// lexicographic parent address. D_p has no outer peripheral circle.
std::vector<PeripheralCircleId> peripheral_circles_up_to(long p, CarpetSpace space, unsigned max_level);

/// q lies on the circle (exact comparisons).
bool on_circle(long p, const PeripheralCircleId& c, const PillowPoint& q);

/// The circle of lowest birth level <= max_level through q, if any.
/// Throws std::domain_error when q is not in the space.
std::optional<PeripheralCircleId> on_peripheral(long p, CarpetSpace space, const PillowPoint& q,
                                                unsigned max_level);

/// Points sampled on a circle: corners and evenly spaced side points.
std::vector<PillowPoint> sample_circle(long p, const PeripheralCircleId& c, std::size_t count);

enum class WeakTangent { W, Wtilde };

/// W = union of p^n S_p (first quadrant); W~ = W u iW u (-1)W.
bool weak_tangent_member(long p, WeakTangent space, const Rational& x, const Rational& y);

}  // namespace sierpinski
