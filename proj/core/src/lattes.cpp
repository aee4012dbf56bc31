#include "sierpinski/lattes.hpp"

#include <stdexcept>

#include "sierpinski/sampling.hpp"

namespace sierpinski {

PillowPoint lattes_apply(long p, const PillowPoint& q) { return lattes_iterate(p, q, 1); }

PillowPoint lattes_iterate(long p, const PillowPoint& q, unsigned n) {
  require_odd_base(p);
  const Rational scale(int_pow(p, n));
  const PlanePoint w = to_plane(q);
  return reduce({w.u * scale, w.v * scale});
}

PillowPoint inverse_branch_apply(long p, unsigned n, const PillowPoint& q) {
  require_odd_base(p);
  if (q.face() != Face::Front) {
    throw std::domain_error("inverse branch is defined on the front face only: " + q.str());
  }
  const Rational scale(int_pow(p, n));
  return PillowPoint::front(q.x() / scale, q.y() / scale);
}

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

TileAddress tile_image(long p, const TileAddress& t, unsigned n) {
  if (n > t.level) throw std::domain_error("cannot push a tile above level 0");
  const unsigned level = t.level - n;
  const auto s = static_cast<std::int64_t>(side_count(p, level));
  // Lower-left corner of the tile's plane cell, in units of p^-(t.level);
  // after multiplying by p^n the same integers are in units of p^-level.
  auto a = static_cast<std::int64_t>(t.i);
  auto b = t.face == Face::Front ? static_cast<std::int64_t>(t.j) : -static_cast<std::int64_t>(t.j) - 1;
  a = floor_mod(a, 2 * s);
  if (a >= s) {  // z -> -z + (2s, 0) in these units
    a = 2 * s - 1 - a;
    b = -b - 1;
  }
  b = floor_mod(b + s, 2 * s) - s;
  if (b >= 0) return {Face::Front, level, static_cast<Index>(a), static_cast<Index>(b)};
  return {Face::Back, level, static_cast<Index>(a), static_cast<Index>(-b - 1)};
}

CheckResult branch_consistency_check(long p, unsigned n, unsigned k, const std::vector<PillowPoint>& sample) {
  CheckResult r;
  for (const PillowPoint& q : sample) {
    const PillowPoint down_n = inverse_branch_apply(p, n, q);
    const PillowPoint down_k = inverse_branch_apply(p, k, q);
    bool ok = lattes_iterate(p, down_n, n) == q;
    ok = ok && inverse_branch_apply(p, n + k, q) == inverse_branch_apply(p, n, down_k);
    if (n > k) ok = ok && lattes_iterate(p, down_n, n - k) == down_k;
    ++r.checked;
    if (!ok) {
      r.ok = false;
      r.witness = q.str();
      return r;
    }
  }
  return r;
}

CheckResult branch_consistency_check(long p, unsigned n, unsigned k) {
  return branch_consistency_check(p, n, k, front_grid_sample(100));
}

CheckResult forward_invariance_check(long p, const std::vector<PillowPoint>& sample) {
  CheckResult r;
  for (const PillowPoint& q : sample) {
    ++r.checked;
    if (!member(p, CarpetSpace::Dp, q)) {
      r.ok = false;
      r.witness = "sample point not in D_p: " + q.str();
      return r;
    }
    const PillowPoint image = lattes_apply(p, q);
    if (!member(p, CarpetSpace::Dp, image)) {
      r.ok = false;
      r.witness = q.str() + " -> " + image.str();
      return r;
    }
  }
  return r;
}

PillowPoint backward_noninvariance_witness(long p) {
  require_odd_base(p);
  const Rational m(static_cast<long>(middle_digit(p)));
  const Rational inv_p(1, p);
  for (long d = 2; d < 64; ++d) {
    for (long a = 1; a < d; ++a) {
      for (long b = 1; b < d; ++b) {
        const PillowPoint z = PillowPoint::front((m + Rational(a, d)) * inv_p, (m + Rational(b, d)) * inv_p);
        if (!member(p, CarpetSpace::Dp, z) && member(p, CarpetSpace::Dp, lattes_apply(p, z))) return z;
      }
    }
  }
  throw std::logic_error("no backward non-invariance witness found");
}

CheckResult side_invariance_check(long p, std::size_t points_per_side) {
  CheckResult r;
  std::vector<Rational> ts;
  for (std::size_t k = 0; k <= points_per_side; ++k) {
    ts.emplace_back(static_cast<long>(k), static_cast<long>(points_per_side));
    ts.emplace_back(1L, static_cast<long>(k + 2));
  }
  const Rational zero(0), one(1);
  for (int side = 0; side < 4; ++side) {
    for (const Rational& t : ts) {
      PillowPoint q;
      switch (side) {
        case 0: q = PillowPoint::front(t, zero); break;  // bottom
        case 1: q = PillowPoint::front(one, t); break;   // right
        case 2: q = PillowPoint::front(t, one); break;   // top
        default: q = PillowPoint::front(zero, t); break;  // left
      }
      const PillowPoint image = lattes_apply(p, q);
      const bool same_side = side == 0 ? image.y() == zero
                           : side == 1 ? image.x() == one
                           : side == 2 ? image.y() == one
                                       : image.x() == zero;
      ++r.checked;
      if (!same_side) {
        r.ok = false;
        r.witness = q.str() + " -> " + image.str();
        return r;
      }
    }
  }
  return r;
}

CheckResult commutes_with_face_swap(long p, const std::vector<PillowPoint>& sample) {
  CheckResult r;
  const IsometryId swap = IsometryId::face_swap();
  for (const PillowPoint& q : sample) {
    ++r.checked;
    const PillowPoint a = lattes_apply(p, isometry_apply(swap, q));
    const PillowPoint b = isometry_apply(swap, lattes_apply(p, q));
    if (!(a == b)) {
      r.ok = false;
      r.witness = q.str() + ": T(R q) = " + a.str() + ", R(T q) = " + b.str();
      return r;
    }
  }
  return r;
}

PeripheralImage peripheral_image(long p, const PeripheralCircleId& c, std::size_t samples) {
  if (c.outer) throw std::domain_error("peripheral_image expects a removed-square circle");
  PeripheralImage out;
  if (c.level == 1) {
    out.image = PeripheralCircleId::outer_circle(CarpetSpace::Dp);
  } else {
    const TileAddress parent = tile_image(p, c.parent(), 1);
    out.image = PeripheralCircleId::removed(CarpetSpace::Dp, parent.face, c.level - 1, parent.i, parent.j);
  }
  out.confirmed = true;
  for (const PillowPoint& q : sample_circle(p, c, samples)) {
    ++out.samples;
    if (!on_circle(p, out.image, lattes_apply(p, q))) out.confirmed = false;
  }
  return out;
}

std::string PointClass::str() const {
  switch (tag) {
    case Tag::Case1: return "case1";
    case Tag::Case2: return "case2";
    case Tag::NotInDp: return "not-in-dp";
    case Tag::Exceptional:
      switch (reason) {
        case Reason::OneVertexF: return "exceptional:vertex";
        case Reason::OnM: return "exceptional:M";
        case Reason::OnMprime: return "exceptional:M'";
        case Reason::None: break;
      }
  }
  return "?";
}

namespace {

// Distance (in face coordinates) from a coordinate to the nearest line
// k/p that does not pass through it.
Rational gap_to_grid(long p, const Rational& c) {
  const Rational scaled = c * Rational(p);
  const Rational below(scaled.floor());
  const Rational above(scaled.ceil());
  const Rational inv_p(1, p);
  if (scaled.is_integer()) return inv_p;
  return std::min(scaled - below, above - scaled) * inv_p;
}

bool scaling_certificate(long p, const PillowPoint& q, std::size_t& pairs) {
  const Rational r = std::min(gap_to_grid(p, q.x()), gap_to_grid(p, q.y())) / Rational(4);
  const PlanePoint w = to_plane(q);
  const Rational half(1, 2), third(1, 3);
  const std::vector<std::pair<Rational, Rational>> offsets = {
      {0, 0}, {r, 0}, {-r, 0}, {0, r}, {0, -r}, {r * half, -r * third}, {-r * third, r * half}, {r * half, r * half}};
  std::vector<PillowPoint> pts;
  for (const auto& [du, dv] : offsets) pts.push_back(reduce({w.u + du, w.v + dv}));
  const Rational p2(p * p);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      ++pairs;
      const Rational before = distance_squared(pts[a], pts[b]);
      const Rational after = distance_squared(lattes_apply(p, pts[a]), lattes_apply(p, pts[b]));
      if (after != p2 * before) return false;
    }
  }
  return true;
}

}  // namespace

PointClass classify_point(long p, const PillowPoint& q) {
  PointClass out;
  if (!member(p, CarpetSpace::Dp, q)) return out;
  const Rational pp(p);
  if ((q.x() * pp).is_integer() && (q.y() * pp).is_integer()) {
    out.tag = PointClass::Tag::Exceptional;
    out.reason = PointClass::Reason::OneVertexF;
    return out;
  }
  const auto mid_front = PeripheralCircleId::removed(CarpetSpace::Dp, Face::Front, 1, 0, 0);
  const auto mid_back = PeripheralCircleId::removed(CarpetSpace::Dp, Face::Back, 1, 0, 0);
  if (on_circle(p, mid_front, q) || on_circle(p, mid_back, q)) {
    out.tag = PointClass::Tag::Exceptional;
    out.reason = q.face() == Face::Front ? PointClass::Reason::OnM : PointClass::Reason::OnMprime;
    return out;
  }
  out.tiles = tile_of_point(p, q, 1);
  for (const TileAddress& t : out.tiles) {
    if (!tile_is_good(p, t)) throw std::logic_error("point of D_p off M, M' in a removed 1-tile: " + q.str());
  }
  if (out.tiles.size() == 1) {
    out.tag = PointClass::Tag::Case1;
  } else if (out.tiles.size() == 2) {
    out.tag = PointClass::Tag::Case2;
  } else {
    throw std::logic_error("non-vertex point in more than two 1-tiles: " + q.str());
  }
  out.scaling_certified = scaling_certificate(p, q, out.pairs_checked);
  return out;
}

bool relation_holds(long p, const IsometryId& g, const RelationWitness& w, const std::vector<PillowPoint>& points) {
  for (const PillowPoint& q : points) {
    const PillowPoint lhs = lattes_iterate(p, isometry_apply(g, q), w.m);
    const PillowPoint rhs = lattes_iterate(p, isometry_apply(g, lattes_iterate(p, q, w.k)), w.n);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::optional<RelationWitness> relation_witness(long p, const IsometryId& g, unsigned bound, std::uint64_t seed,
                                                std::size_t confirm_points) {
  if (bound < 1) throw std::domain_error("relation bound must be >= 1");
  const auto probe = dp_sample(p, 200, seed);
  std::optional<std::vector<PillowPoint>> confirm;
  for (unsigned m = 1; m <= bound; ++m) {
    for (unsigned n = 1; n <= bound; ++n) {
      for (unsigned k = 1; k <= bound; ++k) {
        const RelationWitness w{k, n, m};
        if (!relation_holds(p, g, w, probe)) continue;
        if (!confirm) confirm = dp_sample(p, confirm_points, seed + 1);
        if (relation_holds(p, g, w, *confirm)) return w;
      }
    }
  }
  return std::nullopt;
}

SigmaReport sigma_facts(long p) {
  require_odd_base(p);
  SigmaReport r;
  r.p = p;
  r.sigma = Rational(1, p + 1);
  const PillowPoint sigma = PillowPoint::front(r.sigma, r.sigma);
  r.in_carpet = member(p, CarpetSpace::SpFront, sigma);
  r.off_seam = !sigma.on_seam();
  const Rational lo(p - 1, p * p), hi(1, p);
  r.inside_two_tile = lo < r.sigma && r.sigma < hi;
  const TileAddress x{Face::Front, 2, static_cast<Index>(p - 1), static_cast<Index>(p - 1)};
  r.two_tile_good = tile_is_good(p, x);
  r.two_tile_white = tile_color(x) == TileColor::White;
  r.period_two = lattes_iterate(p, sigma, 2) == sigma;
  return r;
}

}  // namespace sierpinski
