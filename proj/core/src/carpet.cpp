#include "sierpinski/carpet.hpp"

#include <algorithm>
#include <stdexcept>

namespace sierpinski {

std::string_view to_string(CarpetSpace s) {
  switch (s) {
    case CarpetSpace::SpFront: return "sp";
    case CarpetSpace::SpBack: return "sp-back";
    case CarpetSpace::Dp: return "dp";
  }
  return "?";
}

CarpetSpace parse_carpet_space(std::string_view text) {
  if (text == "sp" || text == "sp-front") return CarpetSpace::SpFront;
  if (text == "sp-back") return CarpetSpace::SpBack;
  if (text == "dp") return CarpetSpace::Dp;
  throw std::invalid_argument("unknown carpet space: " + std::string(text));
}

Digit middle_digit(long p) {
  require_odd_base(p);
  return static_cast<Digit>((p - 1) / 2);
}

std::optional<std::size_t> removal_level(long p, const Rational& x, const Rational& y) {
  const Digit m = middle_digit(p);
  const auto xs = expand(x, p);
  const auto ys = expand(y, p);
  std::size_t level = 0;
  for (const DigitExpansion& ex : xs) {
    for (const DigitExpansion& ey : ys) {
      const auto hit = first_forbidden_position(ex, ey, {m, m});
      if (!hit) return std::nullopt;
      level = std::max(level, *hit);
    }
  }
  return level;
}

bool in_square_carpet(long p, const Rational& x, const Rational& y) {
  return !removal_level(p, x, y).has_value();
}

bool member(long p, CarpetSpace space, const PillowPoint& q) {
  switch (space) {
    case CarpetSpace::SpFront:
      if (q.face() != Face::Front) return false;
      break;
    case CarpetSpace::SpBack:
      if (q.face() != Face::Back && !q.on_seam()) return false;
      break;
    case CarpetSpace::Dp:
      break;
  }
  return in_square_carpet(p, q.x(), q.y());
}

bool cantor_member(long p, const Rational& t) {
  const Digit m = middle_digit(p);
  for (const DigitExpansion& e : expand(t, p)) {
    // Pairing an expansion with itself turns "avoids (m,m)" into "avoids m".
    if (eventually_avoids(e, e, {m, m})) return true;
  }
  return false;
}

ProductCheck cp_product_subset_check(long p, const std::vector<std::pair<Rational, Rational>>& samples) {
  ProductCheck out;
  for (const auto& [s, t] : samples) {
    if (!cantor_member(p, s) || !cantor_member(p, t)) continue;
    ++out.checked;
    if (!in_square_carpet(p, s, t)) {
      out.ok = false;
      out.witness = std::make_pair(s, t);
      return out;
    }
  }
  return out;
}

std::string PeripheralCircleId::str() const {
  if (outer) return "outer";
  return "removed:" + std::string(to_string(face)) + ":" + std::to_string(level) + ":" + std::to_string(i) +
         "," + std::to_string(j);
}

PeripheralCircleId PeripheralCircleId::parse(std::string_view text, CarpetSpace ambient) {
  if (text == "outer") return outer_circle(ambient);
  constexpr std::string_view prefix = "removed:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw std::invalid_argument("expected outer or removed:face:k:i,j, got " + std::string(text));
  }
  // The remainder has the tile layout face:k:i,j with k the birth level.
  const TileAddress t = TileAddress::parse(text.substr(prefix.size()));
  if (t.level < 1) throw std::invalid_argument("birth level must be >= 1");
  return removed(ambient, t.face, t.level, t.i, t.j);
}

SquareBounds removed_square(long p, const PeripheralCircleId& c) {
  if (c.outer) return {Rational(0), Rational(1), Rational(0), Rational(1)};
  const BigInt den = int_pow(p, c.level);
  const long m = static_cast<long>(middle_digit(p));
  const BigInt ix = BigInt(static_cast<unsigned long>(c.i)) * p + m;
  const BigInt iy = BigInt(static_cast<unsigned long>(c.j)) * p + m;
  return {Rational(ix, den), Rational(ix + 1, den), Rational(iy, den), Rational(iy + 1, den)};
}

std::vector<PeripheralCircleId> peripheral_circles_up_to(long p, CarpetSpace space, unsigned max_level) {
  if (max_level < 1) throw std::domain_error("max_level must be >= 1");
  std::vector<PeripheralCircleId> out;
  if (space != CarpetSpace::Dp) out.push_back(PeripheralCircleId::outer_circle(space));
  for (Face f : {Face::Front, Face::Back}) {
    if (space == CarpetSpace::SpFront && f == Face::Back) continue;
    if (space == CarpetSpace::SpBack && f == Face::Front) continue;
    for (unsigned k = 1; k <= max_level; ++k) {
      for (const TileAddress& parent : good_tiles(p, k - 1, f)) {
        out.push_back(PeripheralCircleId::removed(space, f, k, parent.i, parent.j));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const PeripheralCircleId& a, const PeripheralCircleId& b) {
    if (a.outer != b.outer) return a.outer;
    return a.level < b.level;
  });
  return out;
}

bool on_circle(long p, const PeripheralCircleId& c, const PillowPoint& q) {
  if (c.outer) return q.on_seam();
  if (q.face() != c.face) return false;
  const SquareBounds b = removed_square(p, c);
  const bool inside = b.x0 <= q.x() && q.x() <= b.x1 && b.y0 <= q.y() && q.y() <= b.y1;
  const bool on_side = q.x() == b.x0 || q.x() == b.x1 || q.y() == b.y0 || q.y() == b.y1;
  return inside && on_side;
}

std::optional<PeripheralCircleId> on_peripheral(long p, CarpetSpace space, const PillowPoint& q,
                                                unsigned max_level) {
  if (!member(p, space, q)) throw std::domain_error(q.str() + " is not in " + std::string(to_string(space)));
  if (space != CarpetSpace::Dp && q.on_seam()) return PeripheralCircleId::outer_circle(space);
  const Index mid = middle_digit(p);
  const Index base = static_cast<Index>(p);
  for (unsigned k = 1; k <= max_level; ++k) {
    const Rational scale(int_pow(p, k));
    auto candidates = [&](const Rational& c) {
      const Rational s = c * scale;
      std::vector<Index> out;
      const Index f = s.floor().get_ui();
      if (f % base == mid) out.push_back(f);
      if (s.is_integer() && f > 0 && (f - 1) % base == mid) out.push_back(f - 1);
      return out;
    };
    for (Index ix : candidates(q.x())) {
      for (Index iy : candidates(q.y())) {
        const PeripheralCircleId c =
            PeripheralCircleId::removed(space, q.face(), k, ix / base, iy / base);
        if (!tile_is_good(p, c.parent())) continue;
        if (on_circle(p, c, q)) return c;
      }
    }
  }
  return std::nullopt;
}

std::vector<PillowPoint> sample_circle(long p, const PeripheralCircleId& c, std::size_t count) {
  const SquareBounds b = removed_square(p, c);
  const Face face = c.outer ? Face::Front : c.face;
  std::vector<PillowPoint> out;
  const std::size_t per_side = std::max<std::size_t>(1, count / 4);
  for (std::size_t k = 0; k < per_side; ++k) {
    const Rational t(static_cast<long>(k), static_cast<long>(per_side));
    const Rational x = b.x0 + (b.x1 - b.x0) * t;
    const Rational y = b.y0 + (b.y1 - b.y0) * t;
    out.emplace_back(face, x, b.y0);                         // bottom, left to right
    out.emplace_back(face, b.x1, y);                         // right, bottom to top
    out.emplace_back(face, b.x1 - (x - b.x0), b.y1);         // top, right to left
    out.emplace_back(face, b.x0, b.y1 - (y - b.y0));         // left, top to bottom
  }
  return out;
}

bool weak_tangent_member(long p, WeakTangent space, const Rational& x, const Rational& y) {
  require_odd_base(p);
  if (space == WeakTangent::Wtilde) {
    // z in iW iff -iz = (y, -x) in W; z in (-1)W iff -z in W.
    return weak_tangent_member(p, WeakTangent::W, x, y) || weak_tangent_member(p, WeakTangent::W, y, -x) ||
           weak_tangent_member(p, WeakTangent::W, -x, -y);
  }
  if (x.sign() < 0 || y.sign() < 0) return false;
  // S_p is contained in p S_p, so the first scale that brings z into the
  // unit square decides membership in the increasing union.
  const Rational extent = std::max(x, y);
  Rational scale(1);
  while (extent > scale) {
    scale *= Rational(p);
  }
  return in_square_carpet(p, x / scale, y / scale);
}

}  // namespace sierpinski
