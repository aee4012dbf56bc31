#include <doctest.h>

#include <cstdlib>

#include "sierpinski/carpet.hpp"
#include "sierpinski/lattes.hpp"
#include "sierpinski/symmetry.hpp"
#include "sierpinski/tiling.hpp"
#include "sierpinski_cli/commands.hpp"

using namespace sierpinski;

TEST_CASE("commands print module results") {
  CHECK(cli::cmd_member(3, "sp", "1/4,1/4@front").text == "true\n");
  CHECK(cli::cmd_member(3, "sp", "1/2,1/2@front").text == "false\n");
  CHECK(cli::cmd_member(3, "dp", "1/4,1/4@back").text == "true\n");
  CHECK_THROWS(cli::cmd_member(3, "sp", "1/4;1/4@front"));
  CHECK_THROWS(cli::cmd_member(4, "sp", "0,0@front"));

  cli::TilesArgs t;
  t.p = 5;
  t.level = 2;
  t.good_only = true;
  CHECK(cli::cmd_tiles(t).text == "1152\n");
  t.p = 3;
  t.level = 1;
  t.mode = cli::TilesMode::List;
  t.face = "back";
  const std::string list = cli::cmd_tiles(t).text;
  CHECK(list.find("back:1:0,0\n") != std::string::npos);
  CHECK(list.find("front:") == std::string::npos);
  CHECK(list.find("back:1:1,1") == std::string::npos);
  t.mode = cli::TilesMode::Color;
  t.tile = "front:1:1,0";
  CHECK(cli::cmd_tiles(t).text == "black\n");
  t.mode = cli::TilesMode::Good;
  t.tile = "front:2:4,4";
  CHECK(cli::cmd_tiles(t).text == "false\n");

  const std::string orbit = cli::cmd_orbit(3, "1/9,1/9@front", 2).text;
  CHECK(orbit == "1/9,1/9@front\n1/3,1/3@front\n1,1@front\n");
  CHECK(cli::cmd_distance("1/2,1/2@front", "1/2,1/2@back").text.rfind("squared 1\n", 0) == 0);
  CHECK(cli::cmd_fixedset(3, "dmain+R", 3).text == "finite 2\n0,0@front\n1,1@front\n");
  CHECK(cli::cmd_fixedset(3, "R", 3).text ==
        fixed_set_classify(IsometryId::face_swap(), 3, 3).str() + "\n");
  CHECK(cli::cmd_relation(3, "r90+R", 3, 0).text == "k=1 n=1 m=2\n");
  const cli::Output none = cli::cmd_relation(3, "r90", 1, 0);
  CHECK(none.text == "none\n");
  CHECK(none.exit_code != 0);
}

TEST_CASE("render command is the renderer") {
  RenderConfig c;
  c.level = 2;
  CHECK(cli::cmd_render(c).text == render_svg(c));
}

TEST_CASE("seed comes from the environment when set") {
  ::unsetenv("CARPET_SEED");
  CHECK(cli::default_seed(7) == 7);
  ::setenv("CARPET_SEED", "42", 1);
  CHECK(cli::default_seed(7) == 42);
  ::setenv("CARPET_SEED", "4x", 1);
  CHECK_THROWS(cli::default_seed(7));
  ::unsetenv("CARPET_SEED");
}
