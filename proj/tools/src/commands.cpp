#include "sierpinski_cli/commands.hpp"

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "sierpinski/carpet.hpp"
#include "sierpinski/lattes.hpp"
#include "sierpinski/symmetry.hpp"
#include "sierpinski/tiling.hpp"
#include "sierpinski/verify.hpp"

namespace sierpinski::cli {

std::uint64_t default_seed(std::uint64_t fallback) {
  const char* env = std::getenv("CARPET_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  std::size_t used = 0;
  const unsigned long long v = std::stoull(env, &used);
  if (env[used] != '\0') throw std::invalid_argument(std::string("CARPET_SEED is not an integer: ") + env);
  return v;
}

Output cmd_member(long p, std::string_view space, std::string_view point) {
  const bool in = member(p, parse_carpet_space(space), PillowPoint::parse(point));
  return {in ? "true\n" : "false\n"};
}

Output cmd_distance(std::string_view a, std::string_view b) {
  const Rational d2 = distance_squared(PillowPoint::parse(a), PillowPoint::parse(b));
  std::ostringstream out;
  out << "squared " << d2.str() << "\n"
      << "approx " << std::setprecision(17) << std::sqrt(d2.to_double()) << "\n";
  return {out.str()};
}

Output cmd_orbit(long p, std::string_view point, unsigned steps) {
  PillowPoint q = PillowPoint::parse(point);
  std::string out = q.str() + "\n";
  for (unsigned k = 0; k < steps; ++k) {
    q = lattes_apply(p, q);
    out += q.str() + "\n";
  }
  return {out};
}

Output cmd_tiles(const TilesArgs& a) {
  switch (a.mode) {
    case TilesMode::Count:
      return {(a.good_only ? count_good_tiles(a.p, a.level) : count_tiles(a.p, a.level)).get_str() + "\n"};
    case TilesMode::List: {
      std::string out;
      std::optional<Face> only;
      if (a.face) only = PillowPoint::parse("1/2,1/2@" + *a.face).face();
      for_each_tile(a.p, a.level, a.good_only, [&](const TileAddress& t) {
        if (!only || t.face == *only) out += t.str() + "\n";
      });
      return {out};
    }
    case TilesMode::Color: return {std::string(to_string(tile_color(TileAddress::parse(a.tile)))) + "\n"};
    case TilesMode::Good: return {tile_is_good(a.p, TileAddress::parse(a.tile)) ? "true\n" : "false\n"};
  }
  throw std::logic_error("unknown tiles mode");
}

Output cmd_fixedset(long p, std::string_view isometry, unsigned resolution) {
  const FixedSetClass c = fixed_set_classify(IsometryId::parse(isometry), p, resolution);
  std::string out = c.str() + "\n";
  for (const PillowPoint& q : c.points) out += q.str() + "\n";
  return {out};
}

Output cmd_relation(long p, std::string_view isometry, unsigned bound, std::uint64_t seed) {
  const auto w = relation_witness(p, IsometryId::parse(isometry), bound, seed);
  if (!w) return {"none\n", 1};
  return {"k=" + std::to_string(w->k) + " n=" + std::to_string(w->n) + " m=" + std::to_string(w->m) + "\n"};
}

Output cmd_verify(long p, std::uint64_t seed, bool timings) {
  SuiteOptions o;
  o.seed = seed;
  o.levels = SuiteLevels::defaults(p);
  o.timings = timings;
  const VerificationReport r = run_suite(p, o);
  return {r.to_json(), r.all_passed() ? 0 : 1};
}

Output cmd_render(const RenderConfig& config) { return {render_svg(config)}; }

}  // namespace sierpinski::cli
