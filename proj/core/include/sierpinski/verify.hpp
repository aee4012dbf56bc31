#pragma once

// Brute-force oracles and the claim suite.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sierpinski/carpet.hpp"
#include "sierpinski/pillow.hpp"
#include "sierpinski/tiling.hpp"

namespace sierpinski {

/// Good-tile matrices at a fixed level, built top-down from level 0 without
/// looking at digits of points.
class GridOracle {
public:
  /// Level is capped at 6 for p = 3 and 4 for p >= 5.
  GridOracle(long p, unsigned level);

  long p() const { return p_; }
  unsigned level() const { return level_; }
  bool good(const TileAddress& t) const;

private:
  long p_;
  unsigned level_;
  Index side_;
  std::vector<std::uint8_t> front_;
  std::vector<std::uint8_t> back_;
};

/// True iff some level-n tile containing q (restricted to the faces of
/// `space`) is good. Exact for points whose coordinates have denominator
/// dividing p^n.
bool oracle_member(const GridOracle& o, const PillowPoint& q, CarpetSpace space = CarpetSpace::Dp);

enum class ClaimStatus { Pass, Fail, Skipped };
std::string_view to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  std::string anchor;  // short statement of the property checked
  ClaimStatus status = ClaimStatus::Pass;
  std::string witness;  // concrete counterexample or reason when not passing
  std::int64_t millis = 0;
};

struct SuiteLevels {
  unsigned tiles = 5;          // tile counts for n <= tiles
  unsigned oracle = 4;         // grid oracle comparison level
  unsigned checkerboard = 4;   // side-sharing pairs for n <= checkerboard
  unsigned color_orbit = 3;    // color versus face of T^n(center) for n <= color_orbit
  unsigned branch = 4;         // inverse branches for n, k <= branch
  unsigned circles = 3;        // peripheral circles up to this birth level
  unsigned cross_m = 2;        // cross regions for m <= cross_m
  unsigned cross_l = 2;        // and 1 <= l <= cross_l
  std::size_t cross_vertices = 200;  // vertex cap per level before striding
  unsigned fixed_resolution = 4;
  unsigned relation_bound = 3;
  unsigned render = 4;

  /// Defaults scaled to p so each claim stays within its time budget.
  static SuiteLevels defaults(long p);
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  SuiteLevels levels;
  bool timings = true;  // false zeroes `millis` for byte-stable reports
  // Replaces tile_color inside the checkerboard claim (fault injection).
  std::function<TileColor(const TileAddress&)> color_rule;
};

struct VerificationReport {
  std::string suite = "sierpinski";
  long p = 3;
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;

  bool all_passed() const;
  /// {suite, p, seed, claims:[{id, anchor, status, witness, millis}]}
  std::string to_json() const;
};

// Individual claims, in suite order.
ClaimResult claim_tile_counts(long p, const SuiteOptions& o);
ClaimResult claim_membership_oracle(long p, const SuiteOptions& o);
ClaimResult claim_checkerboard(long p, const SuiteOptions& o);
ClaimResult claim_lattes_laws(long p, const SuiteOptions& o);
ClaimResult claim_inverse_branches(long p, const SuiteOptions& o);
ClaimResult claim_sigma(long p, const SuiteOptions& o);
ClaimResult claim_peripheral_dynamics(long p, const SuiteOptions& o);
ClaimResult claim_cross_regions(long p, const SuiteOptions& o);
ClaimResult claim_isometry_group(long p, const SuiteOptions& o);
ClaimResult claim_relation_witnesses(long p, const SuiteOptions& o);
ClaimResult claim_admissibility(long p, const SuiteOptions& o);
ClaimResult claim_render_faithfulness(long p, const SuiteOptions& o);

struct ClaimSpec {
  std::string id;
  ClaimResult (*run)(long, const SuiteOptions&);
};
const std::vector<ClaimSpec>& suite_claims();

VerificationReport run_suite(long p, const SuiteOptions& options);
VerificationReport run_suite(long p, std::uint64_t seed);

}  // namespace sierpinski
