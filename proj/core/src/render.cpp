#include "sierpinski/render.hpp"

#include <sstream>
#include <stdexcept>

#include "sierpinski/lattes.hpp"
#include "sierpinski/tiling.hpp"

namespace sierpinski {

namespace {

constexpr std::pair<RenderTarget, std::string_view> kTargetNames[] = {
    {RenderTarget::CarpetFront, "carpet_front"},
    {RenderTarget::CarpetBack, "carpet_back"},
    {RenderTarget::TilesColored, "tiles_colored"},
    {RenderTarget::GoodTiles, "good_tiles"},
    {RenderTarget::WeakTangentW, "weak_tangent_W"},
    {RenderTarget::WeakTangentWtilde, "weak_tangent_Wtilde"},
    {RenderTarget::PeripheralOrbit, "peripheral_orbit"},
};

class Svg {
public:
  Svg(std::uint64_t width, std::uint64_t height, unsigned pixels) : height_(height) {
    const std::uint64_t px_h = height * pixels / width;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << pixels << "\" height=\""
         << (px_h == 0 ? 1 : px_h) << "\" viewBox=\"0 0 " << width << ' ' << height
         << "\" shape-rendering=\"crispEdges\">\n";
  }

  void background(const std::string& color, std::uint64_t width) {
    out_ << "<rect id=\"background\" x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height_
         << "\" fill=\"" << color << "\"/>\n";
  }

  // Everything inside uses a y-up frame.
  void open_flipped(std::string_view id) {
    out_ << "<g id=\"" << id << "\" transform=\"matrix(1 0 0 -1 0 " << height_ << ")\">\n";
  }
  void open_group(std::string_view id, std::string_view attrs) { out_ << "<g id=\"" << id << "\" " << attrs << ">\n"; }
  void close() { out_ << "</g>\n"; }

  void rect(std::string_view id, std::int64_t x, std::int64_t y, std::uint64_t w, std::uint64_t h,
            std::string_view attrs = {}) {
    out_ << "<rect";
    if (!id.empty()) out_ << " id=\"" << id << '"';
    out_ << " x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << '"';
    if (!attrs.empty()) out_ << ' ' << attrs;
    out_ << "/>\n";
  }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

private:
  std::uint64_t height_;
  std::ostringstream out_;
};

std::string tile_id(const TileAddress& t) {
  return std::string(to_string(t.face)) + "-" + std::to_string(t.level) + "-" + std::to_string(t.i) + "-" +
         std::to_string(t.j);
}

std::string fill(const std::string& color) { return "fill=\"" + color + "\""; }

std::string render_carpet(const RenderConfig& c, Face face) {
  const Index s = side_count(c.p, c.level);
  Svg svg(s, s, c.size);
  svg.background(c.palette.background, s);
  svg.open_flipped(std::string(to_string(face)));
  svg.open_group("tiles", fill(c.palette.ink));
  for (const TileAddress& t : good_tiles(c.p, c.level, face)) svg.rect(tile_id(t), t.i, t.j, 1, 1);
  svg.close();
  svg.close();
  return svg.finish();
}

// Both faces side by side: front on the left, back on the right.
template <class Draw>
std::string render_two_faces(const RenderConfig& c, Draw draw) {
  const Index s = side_count(c.p, c.level);
  const Index gap = c.level == 0 ? 1 : s / static_cast<Index>(c.p);
  const Index width = 2 * s + gap;
  Svg svg(width, s, c.size);
  svg.background(c.palette.background, width);
  svg.open_flipped("faces");
  for (Face f : {Face::Front, Face::Back}) {
    const Index offset = f == Face::Front ? 0 : s + gap;
    svg.open_group(std::string(to_string(f)), "transform=\"translate(" + std::to_string(offset) + " 0)\"");
    draw(svg, f, s);
    svg.close();
  }
  svg.close();
  return svg.finish();
}

std::string render_tiles(const RenderConfig& c, bool good_only) {
  return render_two_faces(c, [&](Svg& svg, Face f, Index s) {
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        const TileAddress t{f, c.level, i, j};
        if (good_only && !tile_is_good(c.p, t)) continue;
        const bool white = tile_color(t) == TileColor::White;
        svg.rect(tile_id(t), static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), 1, 1,
                 fill(white ? c.palette.white_tile : c.palette.black_tile));
      }
    }
  });
}

// Cells of side p^-(level-1) over the window. A cell is drawn when the
// point at offset 1/(p+1) from its lower-left corner lies in the weak
// tangent; that offset is a point of C_p x C_p, so it is in a cell exactly
// when the cell survives (the cell centre never is: it is always removed).
std::string render_weak_tangent(const RenderConfig& c, WeakTangent which) {
  if (c.level < 1) throw std::domain_error("weak tangent rendering needs level >= 1");
  const auto per_unit = static_cast<std::int64_t>(side_count(c.p, c.level - 1));
  const std::int64_t lo = which == WeakTangent::W ? 0 : -c.p;
  const std::int64_t cells = (c.p - lo) * per_unit;
  Svg svg(static_cast<std::uint64_t>(cells), static_cast<std::uint64_t>(cells), c.size);
  svg.background(c.palette.background, static_cast<std::uint64_t>(cells));
  svg.open_flipped(which == WeakTangent::W ? "W" : "Wtilde");
  svg.open_group("cells", fill(c.palette.ink));
  const Rational offset(1, c.p + 1);
  const Rational unit(static_cast<long>(per_unit));
  for (std::int64_t a = 0; a < cells; ++a) {
    const Rational x = (Rational(a + lo * per_unit) + offset) / unit;
    for (std::int64_t b = 0; b < cells; ++b) {
      const Rational y = (Rational(b + lo * per_unit) + offset) / unit;
      if (weak_tangent_member(c.p, which, x, y)) svg.rect("w-" + std::to_string(a) + "-" + std::to_string(b), a, b, 1, 1);
    }
  }
  svg.close();
  svg.close();
  return svg.finish();
}

std::string render_orbit(const RenderConfig& c) {
  if (c.level < 1) throw std::domain_error("peripheral orbit rendering needs level >= 1");
  const PeripheralCircleId start =
      c.orbit_start.value_or(PeripheralCircleId::removed(CarpetSpace::Dp, Face::Front, c.level, 0, 0));
  if (!start.outer && start.level > c.level) throw std::domain_error("orbit start is finer than the render level");
  std::vector<PeripheralCircleId> orbit{start};
  while (!orbit.back().outer) orbit.push_back(peripheral_image(c.p, orbit.back(), 0).image);

  const auto units = [&](const Rational& r) {
    return static_cast<std::int64_t>((r * Rational(int_pow(c.p, c.level))).floor().get_si());
  };
  const auto draw_circle = [&](Svg& svg, const PeripheralCircleId& id, Face f, const std::string& prefix) {
    const SquareBounds b = removed_square(c.p, id);
    const std::int64_t x0 = units(b.x0), y0 = units(b.y0);
    svg.rect(prefix + (id.outer ? "outer-" + std::string(to_string(f)) : tile_id(id.parent())), x0, y0,
             static_cast<std::uint64_t>(units(b.x1) - x0), static_cast<std::uint64_t>(units(b.y1) - y0));
  };
  const auto circles = peripheral_circles_up_to(c.p, CarpetSpace::Dp, c.level);
  return render_two_faces(c, [&](Svg& svg, Face f, Index) {
    svg.open_group("carpet-" + std::string(to_string(f)), fill(c.palette.white_tile));
    for (const TileAddress& t : good_tiles(c.p, c.level, f)) svg.rect({}, t.i, t.j, 1, 1);
    svg.close();
    svg.open_group("circles-" + std::string(to_string(f)), "fill=\"none\" stroke=\"" + c.palette.circle + "\" stroke-width=\"0.1\"");
    for (const PeripheralCircleId& id : circles) {
      if (id.face == f) draw_circle(svg, id, f, "circle-");
    }
    svg.close();
    svg.open_group("orbit-" + std::string(to_string(f)), "fill=\"none\" stroke=\"" + c.palette.highlight + "\" stroke-width=\"0.3\"");
    for (const PeripheralCircleId& id : orbit) {
      if (id.outer || id.face == f) draw_circle(svg, id, f, "orbit-");
    }
    svg.close();
  });
}

}  // namespace

std::string_view to_string(RenderTarget t) {
  for (const auto& [target, name] : kTargetNames) {
    if (target == t) return name;
  }
  return "?";
}

RenderTarget parse_render_target(std::string_view text) {
  for (const auto& [target, name] : kTargetNames) {
    if (name == text) return target;
  }
  throw std::invalid_argument("unknown render target: " + std::string(text));
}

std::string render_svg(const RenderConfig& config) {
  require_odd_base(config.p);
  if (config.size == 0) throw std::domain_error("image size must be positive");
  switch (config.target) {
    case RenderTarget::CarpetFront: return render_carpet(config, Face::Front);
    case RenderTarget::CarpetBack: return render_carpet(config, Face::Back);
    case RenderTarget::TilesColored: return render_tiles(config, false);
    case RenderTarget::GoodTiles: return render_tiles(config, true);
    case RenderTarget::WeakTangentW: return render_weak_tangent(config, WeakTangent::W);
    case RenderTarget::WeakTangentWtilde: return render_weak_tangent(config, WeakTangent::Wtilde);
    case RenderTarget::PeripheralOrbit: return render_orbit(config);
  }
  throw std::logic_error("unknown render target");
}

}  // namespace sierpinski
