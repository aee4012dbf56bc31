#pragma once

// Seeded, replayable samplers with exact rational outputs.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// C++ standard. Bounded draws use plain modular reduction rather than
// <random> distributions, whose algorithms are implementation-defined.

#include <cstdint>
#include <random>
#include <vector>

#include "sierpinski/pillow.hpp"

namespace sierpinski {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform-ish integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  bool coin() { return below(2) == 1; }

  /// Rational k / p^6 in [0,1].
  Rational grid_coordinate(long p);

  /// Arbitrary pillow point with coordinates of denominator p^6.
  PillowPoint pillow_point(long p);

  /// Arbitrary point on the front face (including the seam).
  PillowPoint front_point(long p);

  /// Point of D_p. Alternates between rejection-sampled grid points and
  /// eventually periodic points built from digit pairs that avoid (m, m)
  /// (preperiod and period of length <= 3, so denominators stay <= p^6).
  PillowPoint dp_member(long p);

  /// Point of the middle-digit Cantor set, built the same way.
  Rational cantor_point(long p);

private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

/// n points of D_p from a fresh sampler seeded with `seed`.
std::vector<PillowPoint> dp_sample(long p, std::size_t n, std::uint64_t seed);

/// n pillow points from a fresh sampler seeded with `seed`.
std::vector<PillowPoint> pillow_sample(long p, std::size_t n, std::uint64_t seed);

/// Deterministic front-face points (a/d, b/d) walking small denominators;
/// includes corners and seam points.
std::vector<PillowPoint> front_grid_sample(std::size_t n);

}  // namespace sierpinski
