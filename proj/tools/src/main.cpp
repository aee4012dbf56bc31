#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sierpinski/carpet.hpp"
#include "sierpinski_cli/commands.hpp"

using namespace sierpinski;

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for square Sierpinski carpets and the Lattes map of the pillow"};
  app.require_subcommand(1);

  long p = 3;
  auto add_p = [&](CLI::App* sub) { sub->add_option("--p", p, "odd base p >= 3")->capture_default_str(); };

  std::string space = "sp", point, point_b, isometry, out_path, orbit_start;
  unsigned steps = 1, resolution = 4, bound = 3;
  std::optional<std::uint64_t> seed;
  bool no_timings = false;

  auto* member = app.add_subcommand("member", "membership of a point in sp, sp-back or dp");
  add_p(member);
  member->add_option("--space", space)->capture_default_str();
  member->add_option("--point", point, "x,y@face")->required();

  auto* distance = app.add_subcommand("distance", "path distance between two pillow points");
  distance->add_option("--a", point)->required();
  distance->add_option("--b", point_b)->required();

  auto* orbit = app.add_subcommand("orbit", "forward orbit under T, one point per line");
  add_p(orbit);
  orbit->add_option("--point", point)->required();
  orbit->add_option("--steps", steps)->capture_default_str();

  cli::TilesArgs tiles_args;
  auto* tiles = app.add_subcommand("tiles", "tile counts, listings, colors and goodness");
  tiles->require_subcommand(1);
  auto* t_count = tiles->add_subcommand("count", "number of n-tiles");
  auto* t_list = tiles->add_subcommand("list", "addresses of n-tiles");
  auto* t_color = tiles->add_subcommand("color", "checkerboard color of a tile");
  auto* t_good = tiles->add_subcommand("good", "whether a tile is good");
  for (auto* sub : {t_count, t_list}) {
    add_p(sub);
    sub->add_option("--level", tiles_args.level)->required();
    sub->add_flag("--good", tiles_args.good_only, "good tiles only");
  }
  t_list->add_option("--face", tiles_args.face, "front or back");
  for (auto* sub : {t_color, t_good}) {
    add_p(sub);
    sub->add_option("--tile", tiles_args.tile, "face:n:i,j")->required();
  }

  auto* fixedset = app.add_subcommand("fixedset", "fixed-point set of an isometry on D_p");
  add_p(fixedset);
  fixedset->add_option("--isometry", isometry, "id, r90, r180, r270, dmain, danti, hmid, vmid, optionally +R")->required();
  fixedset->add_option("--resolution", resolution)->capture_default_str();

  auto* relation = app.add_subcommand("relation", "least (k,n,m) with T^m g = T^n g T^k");
  add_p(relation);
  relation->add_option("--isometry", isometry)->required();
  relation->add_option("--bound", bound)->capture_default_str();
  relation->add_option("--seed", seed);

  auto* verify = app.add_subcommand("verify", "run the claim suite and print a JSON report");
  add_p(verify);
  verify->add_option("--seed", seed);
  verify->add_flag("--no-timings", no_timings, "report millis as 0");

  RenderConfig config;
  std::string target = "carpet_front";
  auto* render = app.add_subcommand("render", "deterministic SVG output");
  add_p(render);
  render->add_option("--level", config.level)->capture_default_str();
  render->add_option("--target", target)->capture_default_str();
  render->add_option("--size", config.size, "width in pixels")->capture_default_str();
  render->add_option("--orbit-start", orbit_start, "peripheral_orbit start: removed:face:k:i,j");
  render->add_option("--out", out_path, "output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    cli::Output out;
    if (*member) {
      out = cli::cmd_member(p, space, point);
    } else if (*distance) {
      out = cli::cmd_distance(point, point_b);
    } else if (*orbit) {
      out = cli::cmd_orbit(p, point, steps);
    } else if (*tiles) {
      tiles_args.p = p;
      tiles_args.mode = *t_count ? cli::TilesMode::Count
                      : *t_list  ? cli::TilesMode::List
                      : *t_color ? cli::TilesMode::Color
                                 : cli::TilesMode::Good;
      out = cli::cmd_tiles(tiles_args);
    } else if (*fixedset) {
      out = cli::cmd_fixedset(p, isometry, resolution);
    } else if (*relation) {
      out = cli::cmd_relation(p, isometry, bound, seed.value_or(cli::default_seed()));
    } else if (*verify) {
      out = cli::cmd_verify(p, seed.value_or(cli::default_seed()), !no_timings);
    } else if (*render) {
      config.p = p;
      config.target = parse_render_target(target);
      if (!orbit_start.empty()) config.orbit_start = PeripheralCircleId::parse(orbit_start, CarpetSpace::Dp);
      out = cli::cmd_render(config);
      if (!out_path.empty()) {
        std::ofstream file(out_path, std::ios::binary);
        if (!(file << out.text)) throw std::runtime_error("cannot write " + out_path);
        out.text.clear();
      }
    }
    std::cout << out.text;
    return out.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
