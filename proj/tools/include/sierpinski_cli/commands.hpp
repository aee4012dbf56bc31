#pragma once

// Thin adapters between the command line and the core library. Each
// returns the text the tool prints; domain errors propagate as exceptions.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sierpinski/render.hpp"

namespace sierpinski::cli {

struct Output {
  std::string text;
  int exit_code = 0;
};

/// Seed from CARPET_SEED when set, otherwise `fallback`.
std::uint64_t default_seed(std::uint64_t fallback = 0);

Output cmd_member(long p, std::string_view space, std::string_view point);
Output cmd_distance(std::string_view a, std::string_view b);
Output cmd_orbit(long p, std::string_view point, unsigned steps);

enum class TilesMode { Count, List, Color, Good };
struct TilesArgs {
  TilesMode mode = TilesMode::Count;
  long p = 3;
  unsigned level = 1;
  bool good_only = false;
  std::optional<std::string> face;  // list: restrict to one face
  std::string tile;                 // color / good: "face:n:i,j"
};
Output cmd_tiles(const TilesArgs& args);

Output cmd_fixedset(long p, std::string_view isometry, unsigned resolution);
Output cmd_relation(long p, std::string_view isometry, unsigned bound, std::uint64_t seed);
Output cmd_verify(long p, std::uint64_t seed, bool timings);
Output cmd_render(const RenderConfig& config);

}  // namespace sierpinski::cli
