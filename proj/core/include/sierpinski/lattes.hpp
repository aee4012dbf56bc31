#pragma once

// The Lattes map T of the pillow: z -> pz in the plane model. On the corner
// subsquare [0,1/p]^2 of the front face it is the dilation by p, and it
// extends to the whole pillow by reflection.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sierpinski/carpet.hpp"
#include "sierpinski/pillow.hpp"
#include "sierpinski/tiling.hpp"

namespace sierpinski {

PillowPoint lattes_apply(long p, const PillowPoint& q);
/// T^n(q), computed as reduce(p^n * q) in the plane model.
PillowPoint lattes_iterate(long p, const PillowPoint& q, unsigned n);

/// Inverse branch T^-n anchored at the corner (0,0): Q -> [0,p^-n]^2.
/// Throws std::domain_error for points in the interior of the back face.
PillowPoint inverse_branch_apply(long p, unsigned n, const PillowPoint& q);

/// Symbolic image of a tile: T^n maps an (n+k)-tile onto a k-tile.
TileAddress tile_image(long p, const TileAddress& t, unsigned n);

struct CheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string witness;  // first failing input, empty when ok
};

/// T^{-(n+k)} = T^{-n} o T^{-k}, T^n o T^{-n} = id and, when n > k,
/// T^{n-k} o T^{-n} = T^{-k}, on the given front-face sample.
CheckResult branch_consistency_check(long p, unsigned n, unsigned k, const std::vector<PillowPoint>& sample);
/// Same on a deterministic 100-point front-face grid.
CheckResult branch_consistency_check(long p, unsigned n, unsigned k);

/// T(q) in D_p for every sampled q (samples must lie in D_p).
CheckResult forward_invariance_check(long p, const std::vector<PillowPoint>& sample);

/// A rational point z outside D_p with T(z) in D_p, found by a deterministic
/// search over rational points inside the first removed square.
PillowPoint backward_noninvariance_witness(long p);

/// Each side of the unit square is mapped into itself (sampled exactly).
CheckResult side_invariance_check(long p, std::size_t points_per_side = 25);

/// T o R = R o T on the sample.
CheckResult commutes_with_face_swap(long p, const std::vector<PillowPoint>& sample);

struct PeripheralImage {
  PeripheralCircleId image;  // outer marker when the circle is sent onto O
  bool confirmed = false;    // sampled circle points all land on `image`
  std::size_t samples = 0;
};

/// Birth level 1 circles (M, M') go onto O; a circle of birth level k >= 2
/// goes onto the circle of birth level k-1 whose parent is the image tile of
/// its parent. The symbolic answer is confirmed on `samples` circle points.
/// Result ambient is D_p.
PeripheralImage peripheral_image(long p, const PeripheralCircleId& c, std::size_t samples = 20);

/// Local behaviour of T at a point of the pillow.
struct PointClass {
  enum class Tag { Case1, Case2, Exceptional, NotInDp };
  enum class Reason { None, OneVertexF, OnM, OnMprime };

  Tag tag = Tag::NotInDp;
  Reason reason = Reason::None;
  std::vector<TileAddress> tiles;  // the good 1-tile(s) around the point
  bool scaling_certified = false;  // d(Ta,Tb) = p d(a,b) on nearby sampled pairs
  std::size_t pairs_checked = 0;

  std::string str() const;
};

PointClass classify_point(long p, const PillowPoint& q);

struct RelationWitness {
  unsigned k = 0;
  unsigned n = 0;
  unsigned m = 0;
  friend bool operator==(const RelationWitness&, const RelationWitness&) = default;
};

/// Exact check of T^m o g = T^n o g o T^k on the points.
bool relation_holds(long p, const IsometryId& g, const RelationWitness& w, const std::vector<PillowPoint>& points);

/// Lexicographically least (m, n, k) in [1, bound]^3 with T^m o g = T^n o g o T^k
/// on a 200-point D_p sample, confirmed on `confirm_points` further seeded
/// D_p points.
std::optional<RelationWitness> relation_witness(long p, const IsometryId& g, unsigned bound,
                                                std::uint64_t seed = 0, std::size_t confirm_points = 1000);

struct SigmaReport {
  long p = 3;
  Rational sigma;
  bool in_carpet = false;
  bool off_seam = false;
  bool inside_two_tile = false;  // strictly inside [(p-1)/p^2, 1/p]^2
  bool two_tile_good = false;
  bool two_tile_white = false;
  bool period_two = false;       // T^2(sigma) = sigma

  bool ok() const {
    return in_carpet && off_seam && inside_two_tile && two_tile_good && two_tile_white && period_two;
  }
};

SigmaReport sigma_facts(long p);

}  // namespace sierpinski
