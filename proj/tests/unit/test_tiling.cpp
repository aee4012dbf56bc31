#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sierpinski/carpet.hpp"
#include "sierpinski/tiling.hpp"

using namespace sierpinski;

namespace {
Rational r(long a, long b = 1) { return Rational(a, b); }
TileAddress front(unsigned n, Index i, Index j) { return {Face::Front, n, i, j}; }
TileAddress back(unsigned n, Index i, Index j) { return {Face::Back, n, i, j}; }
}  // namespace

TEST_CASE("tile addresses parse and print") {
  const TileAddress t = TileAddress::parse("back:2:4,7");
  CHECK(t == back(2, 4, 7));
  CHECK(TileAddress::parse(t.str()) == t);
  CHECK_THROWS(TileAddress::parse("front:1"));
  CHECK(side_count(3, 4) == 81);
  CHECK_THROWS_AS(side_count(3, 60), std::overflow_error);
}

TEST_CASE("tile_of_point examples") {
  CHECK(tile_of_point(3, PillowPoint::front(r(1, 2), r(1, 2)), 1) == std::vector<TileAddress>{front(1, 1, 1)});
  CHECK(tile_of_point(3, PillowPoint::front(r(1, 3), r(1, 2)), 1) ==
        std::vector<TileAddress>{front(1, 0, 1), front(1, 1, 1)});
  CHECK(tile_of_point(3, PillowPoint::front(r(0), r(0)), 1) == std::vector<TileAddress>{front(1, 0, 0), back(1, 0, 0)});
  CHECK(tile_of_point(3, PillowPoint::front(r(1, 3), r(1, 3)), 1).size() == 4);
  CHECK(tile_of_point(3, PillowPoint::front(r(1, 3), r(0)), 1).size() == 4);
  CHECK(tile_of_point(3, PillowPoint::back(r(1, 6), r(1, 2)), 1) == std::vector<TileAddress>{back(1, 0, 1)});
}

TEST_CASE("tile_of_point agrees with tile_contains") {
  for (const PillowPoint& q : oracle::rational_points(9)) {
    const auto tiles = tile_of_point(3, q, 2);
    for (const TileAddress& t : tiles) CHECK(tile_contains(3, t, q));
    std::size_t containing = 0;
    for (Face f : {Face::Front, Face::Back}) {
      for (Index i = 0; i < 9; ++i) {
        for (Index j = 0; j < 9; ++j) containing += tile_contains(3, {f, 2, i, j}, q) ? 1 : 0;
      }
    }
    CHECK(containing == tiles.size());
  }
}

TEST_CASE("color examples") {
  CHECK(tile_color(front(0, 0, 0)) == TileColor::White);
  CHECK(tile_color(back(0, 0, 0)) == TileColor::Black);
  for (unsigned n = 0; n <= 6; ++n) CHECK(tile_color(front(n, 0, 0)) == TileColor::White);
  CHECK(tile_color(front(1, 1, 0)) == TileColor::Black);
}

TEST_CASE("colors equal the face reached by T^n from the tile center") {
  for (long p : {3L, 5L}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const Index s = side_count(p, n);
      for (Face f : {Face::Front, Face::Back}) {
        for (Index i = 0; i < s; ++i) {
          for (Index j = 0; j < s; ++j) {
            const TileAddress t{f, n, i, j};
            const Face reached = oracle::lattes(p, tile_center(p, t), n).face();
            CHECK((tile_color(t) == TileColor::White) == (reached == Face::Front));
          }
        }
      }
    }
  }
}

TEST_CASE("side-sharing tiles have opposite colors") {
  for (long p : {3L, 5L}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const Index s = side_count(p, n);
      for (Face f : {Face::Front, Face::Back}) {
        for (Index i = 0; i < s; ++i) {
          for (Index j = 0; j < s; ++j) {
            const TileAddress t{f, n, i, j};
            std::size_t neighbours = 0;
            for (const EdgeAddress& e : tile_edges(p, t)) {
              const auto ts = tiles_at_edge(p, e);
              CHECK(ts.size() == 2);
              for (const TileAddress& u : ts) {
                if (u == t) continue;
                ++neighbours;
                CHECK(tile_color(u) != tile_color(t));
              }
            }
            CHECK(neighbours == 4);
          }
        }
      }
    }
  }
}

TEST_CASE("goodness examples and digit oracle") {
  CHECK_FALSE(tile_is_good(3, front(1, 1, 1)));
  CHECK(tile_is_good(3, front(5, 0, 0)));
  CHECK_FALSE(tile_is_good(3, front(2, 4, 4)));
  for (long p : {3L, 5L, 7L}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const Index s = side_count(p, n);
      for (Index i = 0; i < s; ++i) {
        for (Index j = 0; j < s; ++j) {
          const bool good = tile_is_good(p, front(n, i, j));
          CHECK(good == oracle::tile_good(p, n, BigInt(static_cast<unsigned long>(i)), BigInt(static_cast<unsigned long>(j))));
          CHECK(good == tile_is_good(p, back(n, i, j)));
          if (n > 0) {
            const Index m = static_cast<Index>(p / 2);
            const bool parent = tile_is_good(p, front(n - 1, i / p, j / p));
            CHECK(good == (parent && !(i % p == m && j % p == m)));
          }
        }
      }
    }
  }
}

TEST_CASE("a good tile contains carpet points in its interior, a removed one does not") {
  for (long p : {3L, 5L}) {
    const Rational sigma(1, p + 1);
    for (unsigned n = 1; n <= 3; ++n) {
      const Index s = side_count(p, n);
      const Rational scale = rational_pow(p, -static_cast<int>(n));
      for (Index i = 0; i < s; ++i) {
        for (Index j = 0; j < s; ++j) {
          const Rational x = (Rational(BigInt(static_cast<unsigned long>(i))) + sigma) * scale;
          const Rational y = (Rational(BigInt(static_cast<unsigned long>(j))) + sigma) * scale;
          CHECK(tile_is_good(p, front(n, i, j)) == member(p, CarpetSpace::SpFront, PillowPoint::front(x, y)));
        }
      }
    }
  }
}

TEST_CASE("tile counts") {
  CHECK(count_tiles(3, 0) == 2);
  CHECK(count_good_tiles(3, 1) == 16);
  CHECK(count_good_tiles(5, 2) == 1152);
  for (long p : {3L, 5L, 7L}) {
    for (unsigned n = 0; n <= 3; ++n) {
      CHECK(count_tiles(p, n) == 2 * oracle::ipow(p, 2 * n));
      CHECK(count_good_tiles(p, n) == 2 * oracle::ipow(p * p - 1, n));
      CHECK(enumerate_tile_count(p, n, false) == 2 * oracle::ipow(p, 2 * n).get_ui());
      std::uint64_t brute = 0;
      const Index s = side_count(p, n);
      for (Index i = 0; i < s; ++i) {
        for (Index j = 0; j < s; ++j) {
          brute += oracle::tile_good(p, n, BigInt(static_cast<unsigned long>(i)), BigInt(static_cast<unsigned long>(j))) ? 2 : 0;
        }
      }
      CHECK(enumerate_tile_count(p, n, true) == brute);
      std::set<TileAddress> visited;
      for_each_tile(p, n, true, [&](const TileAddress& t) {
        CHECK(tile_is_good(p, t));
        visited.insert(t);
      });
      CHECK(visited.size() == brute);
      CHECK(good_tiles(p, n, Face::Back).size() == brute / 2);
    }
  }
}

TEST_CASE("vertices and edges on the seam") {
  const auto corner = vertex_at(3, PillowPoint::back(r(0), r(0)), 1);
  CHECK(corner.face == Face::Front);
  CHECK(tiles_at_vertex(3, corner).size() == 2);
  CHECK(tiles_at_vertex(3, vertex_at(3, PillowPoint::front(r(1, 3), r(0)), 1)).size() == 4);
  CHECK(tiles_at_vertex(3, vertex_at(3, PillowPoint::back(r(1, 3), r(2, 3)), 1)).size() == 4);
  CHECK_THROWS(vertex_at(3, PillowPoint::front(r(1, 2), r(0)), 1));
  CHECK(vertex_point(3, vertex_at(3, PillowPoint::back(r(1, 3), r(2, 3)), 1)) == PillowPoint::back(r(1, 3), r(2, 3)));
  const auto seam_edge = tiles_at_edge(3, {Face::Back, 1, 1, 0, EdgeOrientation::Horizontal});
  CHECK(seam_edge == std::vector<TileAddress>{front(1, 1, 0), back(1, 1, 0)});
}

TEST_CASE("edge distances") {
  const EdgeAddress a{Face::Front, 2, 1, 1, EdgeOrientation::Horizontal};
  const EdgeAddress b{Face::Front, 2, 1, 3, EdgeOrientation::Horizontal};
  CHECK(edge_distance_squared(3, a, a) == r(0));
  CHECK(edge_distance_squared(3, a, b) == r(4, 81));
  // Across the seam the front and back copies of a bottom edge coincide.
  const EdgeAddress f{Face::Front, 1, 1, 1, EdgeOrientation::Horizontal};
  const EdgeAddress g{Face::Back, 1, 1, 1, EdgeOrientation::Horizontal};
  CHECK(edge_distance_squared(3, f, g) == r(4, 9));
}

TEST_CASE("cross-region certificates") {
  const auto corner = cross_region_check(3, 0, 1, {Face::Front, 0, 0, 0});
  CHECK(corner.ok());
  CHECK(corner.failure.empty());
  CHECK(cross_region_check(3, 1, 1, {Face::Front, 1, 1, 1}).ok());
  CHECK(cross_region_check(5, 1, 2, {Face::Front, 1, 1, 0}).ok());
  CHECK(cross_region_check(3, 2, 2, {Face::Back, 2, 4, 5}).ok());
  CHECK_THROWS(cross_region_check(3, 1, 0, {Face::Front, 1, 1, 1}));
  CHECK_THROWS(cross_region_check(3, 1, 1, {Face::Front, 2, 1, 1}));
}
