#pragma once

// The pillow: two unit squares glued along their boundaries, with the flat
// path metric. Points are handled through the plane model
//
//   Front (x, y)  <->  (x,  y)
//   Back  (x, y)  <->  (x, -y)
//
// where the pillow is the quotient of the plane by the group
// { z -> +-z + t : t in 2Z^2 }. Both the metric and the multiplication map
// z -> pz descend to this quotient, which keeps every computation exact.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sierpinski/exactnum.hpp"

namespace sierpinski {

enum class Face { Front, Back };

std::string_view to_string(Face f);
Face other(Face f);

/// A point of the pillow in canonical form: boundary points live on Front.
class PillowPoint {
public:
  PillowPoint() = default;
  /// Throws std::domain_error if (x, y) is outside the unit square.
  PillowPoint(Face face, Rational x, Rational y);

  static PillowPoint front(Rational x, Rational y) { return {Face::Front, std::move(x), std::move(y)}; }
  static PillowPoint back(Rational x, Rational y) { return {Face::Back, std::move(x), std::move(y)}; }

  /// Parses "x,y@front" / "x,y@back".
  static PillowPoint parse(std::string_view text);

  Face face() const { return face_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  /// On the common boundary O of the two faces.
  bool on_seam() const;

  std::string str() const;

  friend bool operator==(const PillowPoint&, const PillowPoint&) = default;
  friend std::strong_ordering operator<=>(const PillowPoint& a, const PillowPoint& b);

private:
  Face face_ = Face::Front;
  Rational x_;
  Rational y_;
};

/// A point of the plane model.
struct PlanePoint {
  Rational u;
  Rational v;
  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

/// Representative in the fundamental strip [0,1] x (-1,1].
PlanePoint to_plane(const PillowPoint& q);

/// Pillow point whose orbit under {z -> +-z + 2Z^2} contains w.
PillowPoint reduce(const PlanePoint& w);

/// Squared path distance on the pillow (exact).
Rational distance_squared(const PillowPoint& a, const PillowPoint& b);

/// Same quantity computed over an explicit window of translations
/// t in {-2r, ..., 2r}^2; used to validate the narrow window above.
Rational distance_squared_window(const PillowPoint& a, const PillowPoint& b, int radius);

/// Floating-point distance, for reporting only.
double distance(const PillowPoint& a, const PillowPoint& b);

/// Exact test of sqrt(a) + sqrt(b) >= sqrt(c) for non-negative rationals.
bool sqrt_sum_at_least(const Rational& a, const Rational& b, const Rational& c);

// ---------------------------------------------------------------------------
// Isometries

/// The eight symmetries of the unit square.
enum class SquareSymmetry { Id, R90, R180, R270, DMain, DAnti, HMid, VMid };

inline constexpr std::array<SquareSymmetry, 8> kSquareSymmetries = {
    SquareSymmetry::Id,    SquareSymmetry::R90,   SquareSymmetry::R180, SquareSymmetry::R270,
    SquareSymmetry::DMain, SquareSymmetry::DAnti, SquareSymmetry::HMid, SquareSymmetry::VMid};

/// Integer affine map z -> A z + b acting on square coordinates.
struct AffineMap {
  std::array<std::array<int, 2>, 2> a{};
  std::array<int, 2> b{};

  std::pair<Rational, Rational> apply(const Rational& x, const Rational& y) const;
  AffineMap compose(const AffineMap& inner) const;  // this o inner
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

AffineMap affine_of(SquareSymmetry s);

/// One of the 16 isometries of the double carpet: a square symmetry applied
/// to coordinates on both faces, optionally followed by the face swap R.
struct IsometryId {
  SquareSymmetry square = SquareSymmetry::Id;
  bool swap = false;

  static IsometryId identity() { return {}; }
  static IsometryId face_swap() { return {SquareSymmetry::Id, true}; }

  /// Names: id, r90, r180, r270, dmain, danti, hmid, vmid, optional "+R".
  static IsometryId parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const IsometryId&, const IsometryId&) = default;
  friend auto operator<=>(const IsometryId&, const IsometryId&) = default;
};

/// All 16 elements in a fixed order (no-swap elements first).
std::vector<IsometryId> all_isometries();

PillowPoint isometry_apply(const IsometryId& g, const PillowPoint& q);
/// g o h (h applied first).
IsometryId isometry_compose(const IsometryId& g, const IsometryId& h);
IsometryId isometry_inverse(const IsometryId& g);

}  // namespace sierpinski
