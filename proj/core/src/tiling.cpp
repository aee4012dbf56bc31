#include "sierpinski/tiling.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <stdexcept>

namespace sierpinski {

Index side_count(long p, unsigned level) {
  require_odd_base(p);
  Index s = 1;
  for (unsigned k = 0; k < level; ++k) {
    if (s > (Index{1} << 62) / static_cast<Index>(p)) throw std::overflow_error("tile level too deep");
    s *= static_cast<Index>(p);
  }
  return s;
}

TileAddress TileAddress::parse(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = text.find(':', c1 == std::string_view::npos ? c1 : c1 + 1);
  const auto comma = text.find(',');
  if (c1 == std::string_view::npos || c2 == std::string_view::npos || comma == std::string_view::npos ||
      comma < c2) {
    throw std::invalid_argument("expected tile as face:n:i,j: " + std::string(text));
  }
  TileAddress t;
  const auto face = text.substr(0, c1);
  if (face == "front") {
    t.face = Face::Front;
  } else if (face == "back") {
    t.face = Face::Back;
  } else {
    throw std::invalid_argument("unknown face: " + std::string(face));
  }
  try {
    t.level = static_cast<unsigned>(std::stoul(std::string(text.substr(c1 + 1, c2 - c1 - 1))));
    t.i = std::stoull(std::string(text.substr(c2 + 1, comma - c2 - 1)));
    t.j = std::stoull(std::string(text.substr(comma + 1)));
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad tile indices: " + std::string(text));
  }
  return t;
}

std::string TileAddress::str() const {
  return std::string(to_string(face)) + ":" + std::to_string(level) + ":" + std::to_string(i) + "," +
         std::to_string(j);
}

std::string_view to_string(TileColor c) { return c == TileColor::White ? "white" : "black"; }

EdgeAddress canonical_edge(long p, EdgeAddress e) {
  const Index s = side_count(p, e.level);
  const bool horizontal = e.orientation == EdgeOrientation::Horizontal;
  const bool in_range = horizontal ? (e.i < s && e.j <= s) : (e.i <= s && e.j < s);
  if (!in_range) throw std::domain_error("edge outside the pillow");
  const bool seam = horizontal ? (e.j == 0 || e.j == s) : (e.i == 0 || e.i == s);
  if (seam) e.face = Face::Front;
  return e;
}

VertexAddress canonical_vertex(long p, VertexAddress v) {
  const Index s = side_count(p, v.level);
  if (v.i > s || v.j > s) throw std::domain_error("vertex outside the pillow");
  if (v.i == 0 || v.j == 0 || v.i == s || v.j == s) v.face = Face::Front;
  return v;
}

VertexAddress vertex_at(long p, const PillowPoint& q, unsigned level) {
  const Rational scale(int_pow(p, level));
  const Rational x = q.x() * scale;
  const Rational y = q.y() * scale;
  if (!x.is_integer() || !y.is_integer()) {
    throw std::domain_error(q.str() + " is not a vertex of level " + std::to_string(level));
  }
  return canonical_vertex(p, {q.face(), level, x.numerator().get_ui(), y.numerator().get_ui()});
}

namespace {

Rational lattice(long p, unsigned level, Index k) {
  return Rational(BigInt(static_cast<unsigned long>(k)), int_pow(p, level));
}

}  // namespace

PillowPoint vertex_point(long p, const VertexAddress& v) {
  return PillowPoint(v.face, lattice(p, v.level, v.i), lattice(p, v.level, v.j));
}

PillowPoint tile_center(long p, const TileAddress& t) {
  const BigInt den = int_pow(p, t.level) * 2;
  return PillowPoint(t.face, Rational(BigInt(static_cast<unsigned long>(2 * t.i + 1)), den),
                     Rational(BigInt(static_cast<unsigned long>(2 * t.j + 1)), den));
}

std::array<VertexAddress, 4> tile_corners(long p, const TileAddress& t) {
  return {canonical_vertex(p, {t.face, t.level, t.i, t.j}),
          canonical_vertex(p, {t.face, t.level, t.i + 1, t.j}),
          canonical_vertex(p, {t.face, t.level, t.i + 1, t.j + 1}),
          canonical_vertex(p, {t.face, t.level, t.i, t.j + 1})};
}

std::array<EdgeAddress, 4> tile_edges(long p, const TileAddress& t) {
  using O = EdgeOrientation;
  return {canonical_edge(p, {t.face, t.level, t.i, t.j, O::Horizontal}),
          canonical_edge(p, {t.face, t.level, t.i + 1, t.j, O::Vertical}),
          canonical_edge(p, {t.face, t.level, t.i, t.j + 1, O::Horizontal}),
          canonical_edge(p, {t.face, t.level, t.i, t.j, O::Vertical})};
}

namespace {

// Candidate tile indices along one axis for lattice coordinate k (a vertex
// coordinate) or for a point strictly between lattice lines.
std::vector<Index> around_lattice(Index k, Index s) {
  std::vector<Index> out;
  if (k > 0) out.push_back(k - 1);
  if (k < s) out.push_back(k);
  return out;
}

std::vector<TileAddress> product(Face face, unsigned level, const std::vector<Index>& is,
                                 const std::vector<Index>& js, bool seam) {
  std::vector<TileAddress> out;
  for (Face f : {Face::Front, Face::Back}) {
    if (f != face && !seam) continue;
    for (Index i : is) {
      for (Index j : js) out.push_back({f, level, i, j});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TileAddress> tiles_at_edge(long p, const EdgeAddress& e0) {
  const EdgeAddress e = canonical_edge(p, e0);
  const Index s = side_count(p, e.level);
  if (e.orientation == EdgeOrientation::Horizontal) {
    return product(e.face, e.level, {e.i}, around_lattice(e.j, s), e.j == 0 || e.j == s);
  }
  return product(e.face, e.level, around_lattice(e.i, s), {e.j}, e.i == 0 || e.i == s);
}

std::vector<TileAddress> tiles_at_vertex(long p, const VertexAddress& v0) {
  const VertexAddress v = canonical_vertex(p, v0);
  const Index s = side_count(p, v.level);
  const bool seam = v.i == 0 || v.j == 0 || v.i == s || v.j == s;
  return product(v.face, v.level, around_lattice(v.i, s), around_lattice(v.j, s), seam);
}

std::vector<TileAddress> tile_of_point(long p, const PillowPoint& q, unsigned level) {
  const Index s = side_count(p, level);
  const Rational scale(int_pow(p, level));
  auto axis = [&](const Rational& c) {
    const Rational scaled = c * scale;
    const Index k = scaled.floor().get_ui();
    if (scaled.is_integer()) return around_lattice(k, s);
    return std::vector<Index>{k};
  };
  return product(q.face(), level, axis(q.x()), axis(q.y()), q.on_seam());
}

bool tile_contains(long p, const TileAddress& t, const PillowPoint& q) {
  if (!q.on_seam() && q.face() != t.face) return false;
  const Rational lo_x = lattice(p, t.level, t.i), hi_x = lattice(p, t.level, t.i + 1);
  const Rational lo_y = lattice(p, t.level, t.j), hi_y = lattice(p, t.level, t.j + 1);
  return lo_x <= q.x() && q.x() <= hi_x && lo_y <= q.y() && q.y() <= hi_y;
}

TileColor tile_color(const TileAddress& t) {
  const bool even = (t.i + t.j) % 2 == 0;
  const bool white = t.face == Face::Front ? even : !even;
  return white ? TileColor::White : TileColor::Black;
}

bool tile_is_good(long p, const TileAddress& t) {
  const Index s = side_count(p, t.level);
  if (t.i >= s || t.j >= s) throw std::domain_error("tile index out of range: " + t.str());
  const Index base = static_cast<Index>(p);
  const Index mid = base / 2;
  Index i = t.i, j = t.j;
  for (unsigned k = 0; k < t.level; ++k) {
    if (i % base == mid && j % base == mid) return false;
    i /= base;
    j /= base;
  }
  return true;
}

BigInt count_tiles(long p, unsigned level) {
  require_odd_base(p);
  return 2 * int_pow(p, 2 * level);
}

BigInt count_good_tiles(long p, unsigned level) {
  require_odd_base(p);
  return 2 * int_pow(p * p - 1, level);
}

namespace {

// Bit k set iff digit k of the index equals the middle digit.
std::vector<std::uint64_t> middle_digit_masks(long p, unsigned level) {
  const Index s = side_count(p, level);
  const Index base = static_cast<Index>(p);
  std::vector<std::uint64_t> masks(s, 0);
  for (Index i = 0; i < s; ++i) {
    Index rest = i;
    for (unsigned k = 0; k < level; ++k) {
      if (rest % base == base / 2) masks[i] |= std::uint64_t{1} << k;
      rest /= base;
    }
  }
  return masks;
}

}  // namespace

void for_each_tile(long p, unsigned level, bool good_only,
                   const std::function<void(const TileAddress&)>& visit) {
  const Index s = side_count(p, level);
  const auto masks = middle_digit_masks(p, level);
  for (Face f : {Face::Front, Face::Back}) {
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        if (good_only && (masks[i] & masks[j]) != 0) continue;
        visit({f, level, i, j});
      }
    }
  }
}

std::uint64_t enumerate_tile_count(long p, unsigned level, bool good_only) {
  // Same traversal as for_each_tile without the callback indirection, which
  // dominates at p = 7, n = 5 (half a billion tiles).
  const Index s = side_count(p, level);
  const auto masks = middle_digit_masks(p, level);
  std::uint64_t count = 0;
  for (int face = 0; face < 2; ++face) {
    for (Index i = 0; i < s; ++i) {
      const std::uint64_t mi = masks[i];
      if (!good_only || mi == 0) {
        count += s;
        continue;
      }
      for (Index j = 0; j < s; ++j) count += (mi & masks[j]) == 0 ? 1 : 0;
    }
  }
  return count;
}

std::vector<TileAddress> good_tiles(long p, unsigned level, Face face) {
  std::vector<TileAddress> out;
  for_each_tile(p, level, true, [&](const TileAddress& t) {
    if (t.face == face) out.push_back(t);
  });
  return out;
}

namespace {

struct Box {
  Rational u0, u1, v0, v1;
};

// Plane-model image of an edge on its own face (Back flips v).
Box edge_box(long p, const EdgeAddress& e) {
  const Rational x0 = lattice(p, e.level, e.i), y0 = lattice(p, e.level, e.j);
  const bool horizontal = e.orientation == EdgeOrientation::Horizontal;
  const Rational x1 = horizontal ? lattice(p, e.level, e.i + 1) : x0;
  const Rational y1 = horizontal ? y0 : lattice(p, e.level, e.j + 1);
  if (e.face == Face::Front) return {x0, x1, y0, y1};
  return {x0, x1, -y1, -y0};
}

Rational gap(const Rational& a0, const Rational& a1, const Rational& b0, const Rational& b1) {
  if (b0 > a1) return b0 - a1;
  if (a0 > b1) return a0 - b1;
  return Rational(0);
}

}  // namespace

Rational edge_distance_squared(long p, const EdgeAddress& a, const EdgeAddress& b) {
  const Box ba = edge_box(p, a);
  const Box bb = edge_box(p, b);
  std::optional<Rational> best;
  for (int sign : {1, -1}) {
    Box img = sign > 0 ? bb : Box{-bb.u1, -bb.u0, -bb.v1, -bb.v0};
    for (int tu = -1; tu <= 1; ++tu) {
      for (int tv = -1; tv <= 1; ++tv) {
        const Rational du(2L * tu), dv(2L * tv);
        const Rational gu = gap(ba.u0, ba.u1, img.u0 + du, img.u1 + du);
        const Rational gv = gap(ba.v0, ba.v1, img.v0 + dv, img.v1 + dv);
        Rational d = gu * gu + gv * gv;
        if (!best || d < *best) best = std::move(d);
      }
    }
  }
  return *best;
}

CrossRegionReport cross_region_check(long p, unsigned m, unsigned l, const VertexAddress& v0) {
  if (l < 1) throw std::domain_error("cross region needs l >= 1");
  if (v0.level != m) throw std::domain_error("vertex is not an m-vertex");
  const VertexAddress v = canonical_vertex(p, v0);
  const unsigned fine = m + l;
  const Index s_m = side_count(p, m);
  const Index sub = side_count(p, l);
  const bool v_on_seam = v.i == 0 || v.j == 0 || v.i == s_m || v.j == s_m;

  CrossRegionReport rep;
  rep.p = p;
  rep.m = m;
  rep.l = l;
  rep.vertex = v;

  // K: m-edges with v as an endpoint, on v's face and (for seam vertices) the back face.
  std::set<EdgeAddress> k_edges;
  for (Face f : {Face::Front, Face::Back}) {
    if (f != v.face && !v_on_seam) continue;
    using O = EdgeOrientation;
    const std::array<EdgeAddress, 4> candidates = {
        EdgeAddress{f, m, v.i, v.j, O::Horizontal}, EdgeAddress{f, m, v.i - 1, v.j, O::Horizontal},
        EdgeAddress{f, m, v.i, v.j, O::Vertical}, EdgeAddress{f, m, v.i, v.j - 1, O::Vertical}};
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if ((c == 1 && v.i == 0) || (c == 3 && v.j == 0)) continue;
      try {
        k_edges.insert(canonical_edge(p, candidates[c]));
      } catch (const std::domain_error&) {
        // off the square
      }
    }
  }
  rep.k_edges = k_edges.size();

  // Fine edges and fine vertices along K.
  std::set<EdgeAddress> fine_edges;
  std::set<VertexAddress> fine_vertices;
  for (const EdgeAddress& e : k_edges) {
    const bool horizontal = e.orientation == EdgeOrientation::Horizontal;
    for (Index r = 0; r < sub; ++r) {
      const Index fi = e.i * sub + (horizontal ? r : 0);
      const Index fj = e.j * sub + (horizontal ? 0 : r);
      const EdgeAddress fe = canonical_edge(p, {e.face, fine, fi, fj, e.orientation});
      fine_edges.insert(fe);
      fine_vertices.insert(canonical_vertex(p, {e.face, fine, fi, fj}));
      fine_vertices.insert(canonical_vertex(p, {e.face, fine, horizontal ? fi + 1 : fi, horizontal ? fj : fj + 1}));
    }
  }

  // A closed fine tile meets K iff it contains a fine vertex lying on K.
  std::set<TileAddress> omega;
  for (const VertexAddress& fv : fine_vertices) {
    for (const TileAddress& t : tiles_at_vertex(p, fv)) omega.insert(t);
  }
  rep.omega_tiles = omega.size();
  auto in_omega = [&](const TileAddress& t) { return omega.count(t) > 0; };
  auto note = [&](const std::string& why) {
    if (rep.failure.empty()) rep.failure = why;
  };

  // (a) connectivity through shared sides.
  {
    std::set<TileAddress> seen{*omega.begin()};
    std::deque<TileAddress> queue{*omega.begin()};
    while (!queue.empty()) {
      const TileAddress t = queue.front();
      queue.pop_front();
      for (const EdgeAddress& e : tile_edges(p, t)) {
        for (const TileAddress& n : tiles_at_edge(p, e)) {
          if (in_omega(n) && seen.insert(n).second) queue.push_back(n);
        }
      }
    }
    rep.connected = seen.size() == omega.size();
    if (!rep.connected) note("omega tile graph is disconnected");
  }

  // (b) for each fine edge e of K, the tiles cornered at its endpoints form a
  // block M inside Omega whose boundary stays at distance >= p^-(m+l) from e.
  const Rational eps2 = rational_pow(p, -2 * static_cast<int>(fine));
  rep.neighbourhood_contained = true;
  for (const EdgeAddress& e : fine_edges) {
    const bool horizontal = e.orientation == EdgeOrientation::Horizontal;
    const VertexAddress a = canonical_vertex(p, {e.face, fine, e.i, e.j});
    const VertexAddress b = canonical_vertex(p, {e.face, fine, horizontal ? e.i + 1 : e.i, horizontal ? e.j : e.j + 1});
    std::set<TileAddress> block;
    for (const TileAddress& t : tiles_at_vertex(p, a)) block.insert(t);
    for (const TileAddress& t : tiles_at_vertex(p, b)) block.insert(t);
    if (block.size() > 6) {
      rep.neighbourhood_contained = false;
      note("more than six tiles around a fine edge");
    }
    for (const TileAddress& t : block) {
      if (!in_omega(t)) {
        rep.neighbourhood_contained = false;
        note("block tile " + t.str() + " outside omega");
      }
      for (const EdgeAddress& side : tile_edges(p, t)) {
        bool interior = true;
        for (const TileAddress& n : tiles_at_edge(p, side)) interior = interior && block.count(n) > 0;
        if (interior) continue;
        if (edge_distance_squared(p, e, side) < eps2) {
          rep.neighbourhood_contained = false;
          note("block boundary too close to fine edge near tile " + t.str());
        }
      }
    }
  }

  // (c) each Omega tile has a corner outside Omega within sqrt(2) p^-(m+l)
  // of every point of the tile.
  rep.no_large_ball = true;
  const Rational diag2 = eps2 * Rational(2);
  for (const TileAddress& t : omega) {
    const auto corners = tile_corners(p, t);
    bool found = false;
    for (const VertexAddress& c : corners) {
      bool outside = false;
      for (const TileAddress& n : tiles_at_vertex(p, c)) outside = outside || !in_omega(n);
      if (!outside) continue;
      bool close = true;
      const PillowPoint cp = vertex_point(p, c);
      for (const VertexAddress& other_corner : corners) {
        close = close && distance_squared(cp, vertex_point(p, other_corner)) <= diag2;
      }
      if (close) {
        found = true;
        break;
      }
    }
    if (!found) {
      rep.no_large_ball = false;
      note("tile " + t.str() + " has no nearby corner outside omega");
    }
  }
  return rep;
}

}  // namespace sierpinski
