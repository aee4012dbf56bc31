#pragma once

// Deterministic SVG output for carpets, tilings, weak tangents and
// peripheral-circle orbits. Coordinates are integers in units of one
// level-n cell, so no rounding ever happens.

#include <optional>
#include <string>
#include <string_view>

#include "sierpinski/carpet.hpp"

namespace sierpinski {

enum class RenderTarget {
  CarpetFront,
  CarpetBack,
  TilesColored,
  GoodTiles,
  WeakTangentW,
  WeakTangentWtilde,
  PeripheralOrbit,
};

std::string_view to_string(RenderTarget t);
RenderTarget parse_render_target(std::string_view text);

struct Palette {
  std::string background = "#ffffff";
  std::string ink = "#1b1b1b";
  std::string white_tile = "#f3efe2";
  std::string black_tile = "#3a3a3a";
  std::string circle = "#7f7f7f";
  std::string highlight = "#c8102e";
};

struct RenderConfig {
  long p = 3;
  unsigned level = 3;
  RenderTarget target = RenderTarget::CarpetFront;
  unsigned size = 729;  // width of the output in pixels
  Palette palette;
  // Starting circle for peripheral_orbit; defaults to the corner circle of
  // birth level `level` on the front face.
  std::optional<PeripheralCircleId> orbit_start;
};

/// Pure function of the config. Carpet targets draw one rect per good tile
/// with id "<face>-<level>-<i>-<j>".
std::string render_svg(const RenderConfig& config);

}  // namespace sierpinski
