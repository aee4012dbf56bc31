#include "sierpinski/symmetry.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "sierpinski/carpet.hpp"
#include "sierpinski/sampling.hpp"
#include "sierpinski/tiling.hpp"

namespace sierpinski {

std::string FixedSetClass::str() const {
  switch (tag) {
    case Tag::Empty: return "empty";
    case Tag::Finite: return "finite " + std::to_string(count);
    case Tag::Cantor: return "cantor";
    case Tag::JordanCurveO: return "jordan-curve-O";
    case Tag::All: return "all";
  }
  return "?";
}

namespace {

using Point2 = std::pair<Rational, Rational>;

// Solution set of (A - I) z = -b restricted to the closed unit square.
struct Locus {
  enum class Kind { None, Point, Segment, Plane } kind = Kind::None;
  Point2 a;  // the point, or the first endpoint
  Point2 b;  // second endpoint for segments
};

bool in_unit_square(const Point2& z) {
  return Rational(0) <= z.first && z.first <= Rational(1) && Rational(0) <= z.second && z.second <= Rational(1);
}

// Clip the line c0 x + c1 y = rhs to the unit square.
std::vector<Point2> clip_line(long c0, long c1, const Rational& rhs) {
  std::vector<Point2> hits;
  auto add = [&](Point2 z) {
    if (in_unit_square(z) && std::find(hits.begin(), hits.end(), z) == hits.end()) hits.push_back(std::move(z));
  };
  for (long side : {0L, 1L}) {
    if (c1 != 0) add({Rational(side), (rhs - Rational(c0 * side)) / Rational(c1)});
    if (c0 != 0) add({(rhs - Rational(c1 * side)) / Rational(c0), Rational(side)});
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

Locus solve_fixed_locus(const AffineMap& f) {
  const long m00 = f.a[0][0] - 1, m01 = f.a[0][1], m10 = f.a[1][0], m11 = f.a[1][1] - 1;
  const long r0 = -f.b[0], r1 = -f.b[1];
  const long det = m00 * m11 - m01 * m10;
  Locus out;
  if (det != 0) {
    Point2 z{Rational(r0 * m11 - m01 * r1, det), Rational(m00 * r1 - m10 * r0, det)};
    if (in_unit_square(z)) {
      out.kind = Locus::Kind::Point;
      out.a = std::move(z);
    }
    return out;
  }
  if (m00 == 0 && m01 == 0 && m10 == 0 && m11 == 0) {
    if (r0 == 0 && r1 == 0) out.kind = Locus::Kind::Plane;
    return out;
  }
  // Rank one: use a non-zero row and check the other row for consistency.
  const bool first = m00 != 0 || m01 != 0;
  const long c0 = first ? m00 : m10, c1 = first ? m01 : m11, rhs = first ? r0 : r1;
  const long o0 = first ? m10 : m00, o1 = first ? m11 : m01, orhs = first ? r1 : r0;
  if (o0 * rhs != c0 * orhs || o1 * rhs != c1 * orhs) return out;
  const auto hits = clip_line(c0, c1, Rational(rhs));
  if (hits.size() == 1) {
    out.kind = Locus::Kind::Point;
    out.a = hits[0];
  } else if (hits.size() == 2) {
    out.kind = Locus::Kind::Segment;
    out.a = hits[0];
    out.b = hits[1];
  }
  return out;
}

std::vector<PillowPoint> dp_points(long p, const std::vector<PillowPoint>& candidates) {
  std::vector<PillowPoint> out;
  for (const PillowPoint& q : candidates) {
    if (member(p, CarpetSpace::Dp, q) && std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FixedSetClass finite_or_empty(std::vector<PillowPoint> points, std::string why) {
  FixedSetClass c;
  c.count = points.size();
  c.tag = points.empty() ? FixedSetClass::Tag::Empty : FixedSetClass::Tag::Finite;
  c.points = std::move(points);
  c.certificate = std::move(why);
  return c;
}

// Certifies that a fixed segment meets S_p in a Cantor set: the level-k
// pieces of the segment line up with single k-tiles, every surviving piece
// splits into at least two surviving and at least one removed sub-piece up
// to the resolution, and the digit criterion agrees with the tiles at the
// finest level.
std::optional<std::string> certify_cantor_segment(long p, const Point2& a, const Point2& b, unsigned resolution) {
  const Rational dx = b.first - a.first, dy = b.second - a.second;
  auto at = [&](const Rational& t) {
    return PillowPoint::front(a.first + dx * t, a.second + dy * t);
  };
  std::vector<bool> alive{true};
  for (unsigned k = 1; k <= resolution; ++k) {
    const Index pieces = side_count(p, k);
    const Rational width = rational_pow(p, -static_cast<int>(k));
    std::vector<bool> next(pieces, false);
    for (Index r = 0; r < pieces; ++r) {
      const Rational t0 = Rational(BigInt(static_cast<unsigned long>(r))) * width;
      const auto tiles = tile_of_point(p, at(t0 + width / Rational(2)), k);
      if (tiles.size() != 1 || !tile_contains(p, tiles[0], at(t0)) || !tile_contains(p, tiles[0], at(t0 + width))) {
        throw std::logic_error("fixed segment is not aligned with the tile grid");
      }
      next[r] = alive[r / static_cast<Index>(p)] && tile_is_good(p, tiles[0]);
    }
    for (Index parent = 0; parent < alive.size(); ++parent) {
      if (!alive[parent]) continue;
      std::size_t live = 0, dead = 0;
      for (Index c = 0; c < static_cast<Index>(p); ++c) (next[parent * static_cast<Index>(p) + c] ? live : dead)++;
      if (live < 2 || dead < 1) {
        return "level " + std::to_string(k) + " piece " + std::to_string(parent) + " splits into " +
               std::to_string(live) + " surviving / " + std::to_string(dead) + " removed pieces";
      }
    }
    alive = std::move(next);
  }
  const Index pieces = alive.size();
  const Rational width = rational_pow(p, -static_cast<int>(resolution));
  for (Index r = 0; r < pieces; ++r) {
    const Rational t0 = Rational(BigInt(static_cast<unsigned long>(r))) * width;
    const PillowPoint lo = at(t0), mid = at(t0 + width / Rational(2)), hi = at(t0 + width);
    if (alive[r]) {
      if (!member(p, CarpetSpace::SpFront, lo) && !member(p, CarpetSpace::SpFront, hi)) {
        return "surviving piece without carpet endpoint near " + mid.str();
      }
    } else if (member(p, CarpetSpace::SpFront, mid)) {
      return "removed piece whose midpoint " + mid.str() + " passes the digit test";
    }
  }
  return std::nullopt;
}

}  // namespace

FixedSetClass fixed_set_classify(const IsometryId& g, long p, unsigned resolution) {
  require_odd_base(p);
  if (resolution < 3) throw std::domain_error("fixed-set resolution must be >= 3");
  const Locus locus = solve_fixed_locus(affine_of(g.square));
  FixedSetClass out;

  switch (locus.kind) {
    case Locus::Kind::None:
      return finite_or_empty({}, "no fixed point of the square symmetry in Q");

    case Locus::Kind::Plane:
      if (!g.swap) {
        out.tag = FixedSetClass::Tag::All;
        out.certificate = "identity on both faces";
        return out;
      }
      // Swapping faces fixes exactly the seam, which lies in D_p.
      for (const PillowPoint& q : front_grid_sample(200)) {
        if (q.on_seam() && !member(p, CarpetSpace::Dp, q)) {
          throw std::logic_error("seam point outside D_p: " + q.str());
        }
      }
      out.tag = FixedSetClass::Tag::JordanCurveO;
      out.certificate = "face swap fixes exactly the seam O";
      return out;

    case Locus::Kind::Point: {
      const auto& [x, y] = locus.a;
      std::vector<PillowPoint> candidates{PillowPoint::front(x, y)};
      if (!g.swap) {
        candidates.push_back(PillowPoint::back(x, y));
      } else if (!candidates[0].on_seam()) {
        candidates.clear();
      }
      return finite_or_empty(dp_points(p, candidates), "isolated fixed point " + x.str() + "," + y.str());
    }

    case Locus::Kind::Segment: {
      if (g.swap) {
        const PillowPoint e0 = PillowPoint::front(locus.a.first, locus.a.second);
        const PillowPoint e1 = PillowPoint::front(locus.b.first, locus.b.second);
        const PillowPoint mid = PillowPoint::front((locus.a.first + locus.b.first) / Rational(2),
                                                   (locus.a.second + locus.b.second) / Rational(2));
        if (mid.on_seam()) throw std::logic_error("fixed segment runs along the seam");
        return finite_or_empty(dp_points(p, {e0, e1}), "fixed segment meets the seam at its endpoints");
      }
      if (auto failure = certify_cantor_segment(p, locus.a, locus.b, resolution)) {
        throw std::logic_error("fixed segment is not a Cantor set: " + *failure);
      }
      out.tag = FixedSetClass::Tag::Cantor;
      out.certificate = "segment " + locus.a.first.str() + "," + locus.a.second.str() + " -- " +
                        locus.b.first.str() + "," + locus.b.second.str() +
                        " on both faces meets the carpet in a Cantor pattern to level " + std::to_string(resolution);
      return out;
    }
  }
  throw std::logic_error("unreachable fixed locus");
}

}  // namespace sierpinski
