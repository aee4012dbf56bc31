#pragma once

// Level-n subdivision of the pillow into tiles, edges and vertices.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sierpinski/exactnum.hpp"
#include "sierpinski/pillow.hpp"

namespace sierpinski {

using Index = std::uint64_t;

/// p^n as a machine integer; throws std::overflow_error past 2^62.
Index side_count(long p, unsigned level);

/// Closed square [i/p^n,(i+1)/p^n] x [j/p^n,(j+1)/p^n] on one face.
struct TileAddress {
  Face face = Face::Front;
  unsigned level = 0;
  Index i = 0;
  Index j = 0;

  /// "front:n:i,j"
  static TileAddress parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const TileAddress&, const TileAddress&) = default;
  friend auto operator<=>(const TileAddress&, const TileAddress&) = default;
};

enum class TileColor { White, Black };
std::string_view to_string(TileColor c);

enum class EdgeOrientation { Horizontal, Vertical };

/// Horizontal edge: (i,j)-(i+1,j); vertical edge: (i,j)-(i,j+1), in units of
/// p^-level. Edges on the seam are stored on Front.
struct EdgeAddress {
  Face face = Face::Front;
  unsigned level = 0;
  Index i = 0;
  Index j = 0;
  EdgeOrientation orientation = EdgeOrientation::Horizontal;

  friend bool operator==(const EdgeAddress&, const EdgeAddress&) = default;
  friend auto operator<=>(const EdgeAddress&, const EdgeAddress&) = default;
};

/// Lattice point (i/p^n, j/p^n), 0 <= i,j <= p^n. Seam vertices live on Front.
struct VertexAddress {
  Face face = Face::Front;
  unsigned level = 0;
  Index i = 0;
  Index j = 0;

  friend bool operator==(const VertexAddress&, const VertexAddress&) = default;
  friend auto operator<=>(const VertexAddress&, const VertexAddress&) = default;
};

/// Canonical forms (seam elements moved to Front); throw on out-of-range indices.
EdgeAddress canonical_edge(long p, EdgeAddress e);
VertexAddress canonical_vertex(long p, VertexAddress v);

/// The vertex located at q, or std::domain_error if q is not a level-n vertex.
VertexAddress vertex_at(long p, const PillowPoint& q, unsigned level);
PillowPoint vertex_point(long p, const VertexAddress& v);

PillowPoint tile_center(long p, const TileAddress& t);
/// Corners in order (i,j), (i+1,j), (i+1,j+1), (i,j+1).
std::array<VertexAddress, 4> tile_corners(long p, const TileAddress& t);
/// Bottom, right, top, left.
std::array<EdgeAddress, 4> tile_edges(long p, const TileAddress& t);

/// All tiles of the edge's level having the edge as a side (always 2).
std::vector<TileAddress> tiles_at_edge(long p, const EdgeAddress& e);
/// All tiles of the vertex's level having the vertex as a corner.
std::vector<TileAddress> tiles_at_vertex(long p, const VertexAddress& v);

/// Every level-n tile containing q (1, 2 or 4 on a face; seam points also
/// pick up the matching tiles on the back face). Sorted.
std::vector<TileAddress> tile_of_point(long p, const PillowPoint& q, unsigned level);

/// Closed containment test.
bool tile_contains(long p, const TileAddress& t, const PillowPoint& q);

/// Checkerboard color: Front tiles are white iff i+j is even, Back tiles
/// iff i+j is odd.
TileColor tile_color(const TileAddress& t);

/// No digit position k in 1..n carries the pair (m,m), m = (p-1)/2.
bool tile_is_good(long p, const TileAddress& t);

/// Closed forms 2 p^{2n} and 2 (p^2-1)^n.
BigInt count_tiles(long p, unsigned level);
BigInt count_good_tiles(long p, unsigned level);

/// Visits tiles in lexicographic (face, i, j) order.
void for_each_tile(long p, unsigned level, bool good_only,
                   const std::function<void(const TileAddress&)>& visit);

/// Enumerated counts (no closed form involved).
std::uint64_t enumerate_tile_count(long p, unsigned level, bool good_only);

/// Good tiles of one face in lexicographic order.
std::vector<TileAddress> good_tiles(long p, unsigned level, Face face);

/// Squared pillow distance between two edges (as closed segments).
Rational edge_distance_squared(long p, const EdgeAddress& a, const EdgeAddress& b);

/// Certificates for the cross-neighbourhood region around an m-vertex v:
/// K is the union of m-edges at v, Omega the interior of the union of
/// (m+l)-tiles meeting K.
struct CrossRegionReport {
  long p = 3;
  unsigned m = 0;
  unsigned l = 1;
  VertexAddress vertex;
  std::size_t k_edges = 0;
  std::size_t omega_tiles = 0;
  bool connected = false;               // tile adjacency graph of Omega is connected
  bool neighbourhood_contained = false;  // open p^-(m+l) neighbourhood of K lies in Omega
  bool no_large_ball = false;            // each Omega tile has an outside corner within sqrt2 p^-(m+l)
  std::string failure;                   // first failing witness, empty if all pass

  bool ok() const { return connected && neighbourhood_contained && no_large_ball; }
};

CrossRegionReport cross_region_check(long p, unsigned m, unsigned l, const VertexAddress& v);

}  // namespace sierpinski
