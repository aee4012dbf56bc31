#include "sierpinski/pillow.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

namespace sierpinski {

std::string_view to_string(Face f) { return f == Face::Front ? "front" : "back"; }

Face other(Face f) { return f == Face::Front ? Face::Back : Face::Front; }

PillowPoint::PillowPoint(Face face, Rational x, Rational y)
    : face_(face), x_(std::move(x)), y_(std::move(y)) {
  const Rational zero(0), one(1);
  if (x_ < zero || x_ > one || y_ < zero || y_ > one) {
    throw std::domain_error("pillow point outside the unit square: " + x_.str() + "," + y_.str());
  }
  if (on_seam()) face_ = Face::Front;
}

bool PillowPoint::on_seam() const {
  const Rational zero(0), one(1);
  return x_ == zero || x_ == one || y_ == zero || y_ == one;
}

PillowPoint PillowPoint::parse(std::string_view text) {
  const auto at = text.find('@');
  const auto comma = text.find(',');
  if (at == std::string_view::npos || comma == std::string_view::npos || comma > at) {
    throw std::invalid_argument("expected point as x,y@front or x,y@back: " + std::string(text));
  }
  const auto face_text = text.substr(at + 1);
  Face face;
  if (face_text == "front") {
    face = Face::Front;
  } else if (face_text == "back") {
    face = Face::Back;
  } else {
    throw std::invalid_argument("unknown face: " + std::string(face_text));
  }
  return {face, Rational::parse(text.substr(0, comma)),
          Rational::parse(text.substr(comma + 1, at - comma - 1))};
}

std::string PillowPoint::str() const {
  return x_.str() + "," + y_.str() + "@" + std::string(to_string(face_));
}

std::strong_ordering operator<=>(const PillowPoint& a, const PillowPoint& b) {
  if (a.face_ != b.face_) return a.face_ < b.face_ ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = a.x_ <=> b.x_; c != 0) return c;
  return a.y_ <=> b.y_;
}

PlanePoint to_plane(const PillowPoint& q) {
  if (q.face() == Face::Front) return {q.x(), q.y()};
  return {q.x(), -q.y()};
}

PillowPoint reduce(const PlanePoint& w) {
  const Rational two(2);
  Rational u = w.u - two * Rational(Rational(w.u / two).floor());
  Rational v = w.v;
  if (u > Rational(1)) {
    u = two - u;
    v = -v;
  }
  // v into [-1, 1), then the seam value -1 becomes 1.
  v = v - two * Rational(Rational((v + Rational(1)) / two).floor());
  if (v == Rational(-1)) v = Rational(1);
  if (v.sign() >= 0) return PillowPoint(Face::Front, u, v);
  return PillowPoint(Face::Back, u, -v);
}

namespace {

Rational squared_norm(const Rational& du, const Rational& dv) { return du * du + dv * dv; }

}  // namespace

Rational distance_squared_window(const PillowPoint& a, const PillowPoint& b, int radius) {
  const PlanePoint pa = to_plane(a);
  const PlanePoint pb = to_plane(b);
  std::optional<Rational> best;
  for (int sign : {1, -1}) {
    const Rational bu = sign > 0 ? pb.u : -pb.u;
    const Rational bv = sign > 0 ? pb.v : -pb.v;
    for (int tu = -radius; tu <= radius; ++tu) {
      for (int tv = -radius; tv <= radius; ++tv) {
        Rational d = squared_norm(pa.u - bu - Rational(2L * tu), pa.v - bv - Rational(2L * tv));
        if (!best || d < *best) best = std::move(d);
      }
    }
  }
  return *best;
}

Rational distance_squared(const PillowPoint& a, const PillowPoint& b) {
  // Both representatives lie in [0,1] x [-1,1], so translations by at most
  // one period in each direction reach the closest image.
  return distance_squared_window(a, b, 1);
}

double distance(const PillowPoint& a, const PillowPoint& b) {
  return std::sqrt(distance_squared(a, b).to_double());
}

bool sqrt_sum_at_least(const Rational& a, const Rational& b, const Rational& c) {
  const Rational gap = c - a - b;
  if (gap.sign() <= 0) return true;
  return gap * gap <= Rational(4) * a * b;
}

// ---------------------------------------------------------------------------

std::pair<Rational, Rational> AffineMap::apply(const Rational& x, const Rational& y) const {
  return {Rational(a[0][0]) * x + Rational(a[0][1]) * y + Rational(b[0]),
          Rational(a[1][0]) * x + Rational(a[1][1]) * y + Rational(b[1])};
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
  AffineMap out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out.a[r][c] = a[r][0] * inner.a[0][c] + a[r][1] * inner.a[1][c];
    }
    out.b[r] = a[r][0] * inner.b[0] + a[r][1] * inner.b[1] + b[r];
  }
  return out;
}

AffineMap affine_of(SquareSymmetry s) {
  switch (s) {
    case SquareSymmetry::Id:    return {{{{1, 0}, {0, 1}}}, {0, 0}};
    case SquareSymmetry::R90:   return {{{{0, -1}, {1, 0}}}, {1, 0}};
    case SquareSymmetry::R180:  return {{{{-1, 0}, {0, -1}}}, {1, 1}};
    case SquareSymmetry::R270:  return {{{{0, 1}, {-1, 0}}}, {0, 1}};
    case SquareSymmetry::DMain: return {{{{0, 1}, {1, 0}}}, {0, 0}};
    case SquareSymmetry::DAnti: return {{{{0, -1}, {-1, 0}}}, {1, 1}};
    case SquareSymmetry::HMid:  return {{{{1, 0}, {0, -1}}}, {0, 1}};
    case SquareSymmetry::VMid:  return {{{{-1, 0}, {0, 1}}}, {1, 0}};
  }
  throw std::logic_error("unknown square symmetry");
}

namespace {

constexpr std::array<std::string_view, 8> kSymmetryNames = {
    "id", "r90", "r180", "r270", "dmain", "danti", "hmid", "vmid"};

SquareSymmetry symmetry_of(const AffineMap& m) {
  for (SquareSymmetry s : kSquareSymmetries) {
    if (affine_of(s) == m) return s;
  }
  throw std::logic_error("affine map is not a symmetry of the unit square");
}

}  // namespace

IsometryId IsometryId::parse(std::string_view text) {
  IsometryId g;
  if (text.size() >= 2 && text.substr(text.size() - 2) == "+R") {
    g.swap = true;
    text.remove_suffix(2);
  }
  if (text == "R" && g.swap == false) return face_swap();
  for (std::size_t i = 0; i < kSymmetryNames.size(); ++i) {
    if (kSymmetryNames[i] == text) {
      g.square = kSquareSymmetries[i];
      return g;
    }
  }
  throw std::invalid_argument("unknown isometry name: " + std::string(text));
}

std::string IsometryId::str() const {
  std::string s(kSymmetryNames[static_cast<std::size_t>(square)]);
  if (swap) s += "+R";
  return s;
}

std::vector<IsometryId> all_isometries() {
  std::vector<IsometryId> out;
  for (bool swap : {false, true}) {
    for (SquareSymmetry s : kSquareSymmetries) out.push_back({s, swap});
  }
  return out;
}

PillowPoint isometry_apply(const IsometryId& g, const PillowPoint& q) {
  auto [x, y] = affine_of(g.square).apply(q.x(), q.y());
  const Face face = g.swap ? other(q.face()) : q.face();
  return PillowPoint(face, std::move(x), std::move(y));
}

IsometryId isometry_compose(const IsometryId& g, const IsometryId& h) {
  // The face swap commutes with every square symmetry.
  return {symmetry_of(affine_of(g.square).compose(affine_of(h.square))), g.swap != h.swap};
}

IsometryId isometry_inverse(const IsometryId& g) {
  for (const IsometryId& h : all_isometries()) {
    if (isometry_compose(g, h) == IsometryId::identity()) return h;
  }
  throw std::logic_error("isometry without inverse");
}

}  // namespace sierpinski
