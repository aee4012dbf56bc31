#include <doctest.h>

#include <regex>
#include <set>

#include "oracles.hpp"
#include "sierpinski/render.hpp"
#include "sierpinski/tiling.hpp"

using namespace sierpinski;

namespace {

std::set<std::string> ids(const std::string& svg, const std::string& prefix) {
  std::set<std::string> out;
  const std::regex re("id=\"(" + prefix + "[^\"]*)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) out.insert((*it)[1]);
  return out;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("carpet_front draws exactly the good front tiles") {
  for (long p : {3L, 5L}) {
    for (unsigned n : {0u, 1u, 2u, 3u}) {
      RenderConfig c;
      c.p = p;
      c.level = n;
      const std::string svg = render_svg(c);
      std::set<std::string> expected;
      const Index s = side_count(p, n);
      for (Index i = 0; i < s; ++i) {
        for (Index j = 0; j < s; ++j) {
          if (oracle::tile_good(p, n, BigInt(static_cast<unsigned long>(i)), BigInt(static_cast<unsigned long>(j)))) {
            expected.insert("front-" + std::to_string(n) + "-" + std::to_string(i) + "-" + std::to_string(j));
          }
        }
      }
      CHECK(ids(svg, "front-") == expected);
      CHECK(count(svg, "<rect") == expected.size() + 1);
      CHECK(svg.find("viewBox=\"0 0 " + std::to_string(s) + " " + std::to_string(s) + "\"") != std::string::npos);
    }
  }
}

TEST_CASE("level 4 carpet has 4096 squares and is byte stable") {
  RenderConfig c;
  c.level = 4;
  const std::string a = render_svg(c);
  CHECK(ids(a, "front-4-").size() == 4096);
  CHECK(a == render_svg(c));
  c.target = RenderTarget::CarpetBack;
  CHECK(ids(render_svg(c), "back-4-").size() == 4096);
}

TEST_CASE("other targets") {
  RenderConfig c;
  c.level = 2;
  c.target = RenderTarget::TilesColored;
  const std::string colored = render_svg(c);
  CHECK(ids(colored, "front-2-").size() == 81);
  CHECK(ids(colored, "back-2-").size() == 81);
  CHECK(count(colored, "fill=\"" + c.palette.white_tile + "\"") == 81);

  c.target = RenderTarget::GoodTiles;
  const std::string good = render_svg(c);
  CHECK(ids(good, "front-2-").size() == 64);
  CHECK(ids(good, "back-2-").size() == 64);

  c.target = RenderTarget::WeakTangentW;
  const std::string w = render_svg(c);
  CHECK(ids(w, "w-").size() == 64);  // [0,3]^2 of W is 3 S_3
  CHECK(w.find("viewBox=\"0 0 9 9\"") != std::string::npos);

  c.target = RenderTarget::WeakTangentWtilde;
  const std::string wt = render_svg(c);
  CHECK(ids(wt, "w-").size() == 3 * 64);
  CHECK(wt.find("viewBox=\"0 0 18 18\"") != std::string::npos);

  c.target = RenderTarget::PeripheralOrbit;
  const std::string orbit = render_svg(c);
  CHECK(ids(orbit, "orbit-").count("orbit-front-1-0-0") == 1);
  CHECK(ids(orbit, "orbit-").count("orbit-front-0-0-0") == 1);
  CHECK(ids(orbit, "orbit-outer-").size() == 2);
  CHECK(ids(orbit, "circle-").size() == 2 * (1 + 8));
  CHECK(orbit == render_svg(c));

  c.level = 0;
  CHECK_THROWS(render_svg(c));
  CHECK(parse_render_target("weak_tangent_Wtilde") == RenderTarget::WeakTangentWtilde);
  CHECK(to_string(RenderTarget::GoodTiles) == "good_tiles");
  CHECK_THROWS(parse_render_target("raster"));
}
