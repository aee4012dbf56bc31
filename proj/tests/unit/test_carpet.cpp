#include <doctest.h>

#include "oracles.hpp"
#include "sierpinski/carpet.hpp"
#include "sierpinski/sampling.hpp"

using namespace sierpinski;

namespace {
Rational r(long a, long b = 1) { return Rational(a, b); }
PillowPoint f(long a, long b, long c, long d) { return PillowPoint::front(r(a, b), r(c, d)); }
}  // namespace

TEST_CASE("membership examples") {
  CHECK(member(3, CarpetSpace::SpFront, f(0, 1, 0, 1)));
  CHECK_FALSE(member(3, CarpetSpace::SpFront, f(1, 2, 1, 2)));
  CHECK(member(3, CarpetSpace::SpFront, f(1, 4, 1, 4)));
  // Boundary of the removed square: kept through the alternative expansion.
  CHECK(member(3, CarpetSpace::SpFront, f(1, 3, 1, 2)));
  CHECK(member(3, CarpetSpace::Dp, PillowPoint::back(r(1, 4), r(3, 4))));
  CHECK_FALSE(member(3, CarpetSpace::SpFront, PillowPoint::back(r(1, 4), r(3, 4))));
  CHECK(member(3, CarpetSpace::SpBack, PillowPoint::back(r(1, 4), r(3, 4))));
  CHECK(member(3, CarpetSpace::SpBack, f(0, 1, 1, 2)));
  CHECK(removal_level(3, r(1, 2), r(1, 2)) == std::optional<std::size_t>(1));
  CHECK(removal_level(3, r(1, 2), r(1, 6)) == std::optional<std::size_t>(2));
  CHECK_FALSE(removal_level(3, r(1, 4), r(1, 4)).has_value());
  CHECK(parse_carpet_space("sp") == CarpetSpace::SpFront);
  CHECK(parse_carpet_space("dp") == CarpetSpace::Dp);
  CHECK_THROWS(parse_carpet_space("torus"));
}

TEST_CASE("digit criterion agrees with the level-by-level tile oracle") {
  for (long p : {3L, 5L}) {
    for (long d = 1; d <= 26; ++d) {
      for (long a = 0; a <= d; ++a) {
        for (long b = 0; b <= d; ++b) {
          const Rational x(a, d), y(b, d);
          const bool in = in_square_carpet(p, x, y);
          const auto level = removal_level(p, x, y);
          CHECK(in == !level.has_value());
          // The oracle needs enough levels to see the removal.
          const unsigned n = level ? static_cast<unsigned>(*level) + 1 : 10;
          CHECK_MESSAGE(in == oracle::square_member(p, x, y, n), (x.str() + "," + y.str()));
        }
      }
    }
  }
}

TEST_CASE("Cantor set and products") {
  CHECK(cantor_member(3, r(0)));
  CHECK_FALSE(cantor_member(3, r(1, 2)));
  CHECK(cantor_member(3, r(1, 4)));
  CHECK(cantor_member(3, r(1, 3)));
  CHECK(member(3, CarpetSpace::SpFront, f(0, 1, 1, 1)));
  CHECK(member(3, CarpetSpace::SpFront, f(1, 4, 3, 4)));
  for (long p : {3L, 5L}) {
    Sampler s(17);
    std::vector<std::pair<Rational, Rational>> pairs;
    for (int k = 0; k < 1000; ++k) {
      Rational x = s.cantor_point(p);
      Rational y = s.cantor_point(p);
      CHECK(cantor_member(p, x));
      pairs.emplace_back(std::move(x), std::move(y));
    }
    const ProductCheck c = cp_product_subset_check(p, pairs);
    CHECK(c.ok);
    CHECK(c.checked == 1000);
  }
}

TEST_CASE("peripheral circles") {
  CHECK(peripheral_circles_up_to(3, CarpetSpace::SpFront, 1).size() == 2);
  CHECK(peripheral_circles_up_to(3, CarpetSpace::SpFront, 2).size() == 10);
  CHECK(peripheral_circles_up_to(3, CarpetSpace::Dp, 1).size() == 2);
  CHECK(peripheral_circles_up_to(5, CarpetSpace::Dp, 2).size() == 2 * (1 + 24));
  const auto m = PeripheralCircleId::removed(CarpetSpace::SpFront, Face::Front, 1, 0, 0);
  CHECK(on_peripheral(3, CarpetSpace::SpFront, f(1, 3, 1, 2), 3) == std::optional<PeripheralCircleId>(m));
  CHECK(on_peripheral(3, CarpetSpace::SpFront, f(0, 1, 1, 2), 3) ==
        std::optional<PeripheralCircleId>(PeripheralCircleId::outer_circle(CarpetSpace::SpFront)));
  CHECK_FALSE(on_peripheral(3, CarpetSpace::SpFront, f(1, 4, 1, 4), 10).has_value());
  CHECK_THROWS_AS(on_peripheral(3, CarpetSpace::SpFront, f(1, 2, 1, 2), 3), std::domain_error);
  CHECK(PeripheralCircleId::parse(m.str(), CarpetSpace::SpFront) == m);
  CHECK(PeripheralCircleId::parse("outer", CarpetSpace::Dp).outer);

  for (long p : {3L, 5L}) {
    for (const auto& c : peripheral_circles_up_to(p, CarpetSpace::Dp, 2)) {
      for (const PillowPoint& q : sample_circle(p, c, 12)) {
        CHECK(member(p, CarpetSpace::Dp, q));
        CHECK(on_circle(p, c, q));
      }
      const SquareBounds b = removed_square(p, c);
      const PillowPoint centre(c.face, (b.x0 + b.x1) / r(2), (b.y0 + b.y1) / r(2));
      CHECK_FALSE(member(p, CarpetSpace::Dp, centre));
    }
  }
}

TEST_CASE("the diagonal point on the middle circle") {
  for (long p : {3L, 5L, 7L}) {
    const Rational t(p - 1, 2 * p);
    const PillowPoint q = PillowPoint::front(t, t);
    CHECK(member(p, CarpetSpace::SpFront, q));
    CHECK(on_circle(p, PeripheralCircleId::removed(CarpetSpace::SpFront, Face::Front, 1, 0, 0), q));
  }
}

TEST_CASE("weak tangents") {
  CHECK(weak_tangent_member(3, WeakTangent::W, r(0), r(0)));
  CHECK(weak_tangent_member(3, WeakTangent::W, r(2), r(2)));
  CHECK_FALSE(weak_tangent_member(3, WeakTangent::W, r(-1), r(0)));
  CHECK(weak_tangent_member(3, WeakTangent::Wtilde, r(-1), r(0)));
  CHECK_FALSE(weak_tangent_member(3, WeakTangent::W, r(3, 2), r(3, 2)));
  CHECK_FALSE(weak_tangent_member(3, WeakTangent::Wtilde, r(-3, 2), r(-3, 2)));
  for (long p : {3L, 5L}) {
    for (const PillowPoint& q : dp_sample(p, 1000, 23)) {
      const Rational x = q.x(), y = q.y();
      // S_p sits inside p S_p, so the union defining W is increasing.
      CHECK(member(p, CarpetSpace::SpFront, PillowPoint::front(x / r(p), y / r(p))));
      CHECK(weak_tangent_member(p, WeakTangent::W, x * r(p), y * r(p)));
      CHECK(weak_tangent_member(p, WeakTangent::W, x, y));
    }
  }
}

TEST_CASE("isometries preserve D_p membership") {
  const auto sample = dp_sample(3, 1000, 29);
  for (const IsometryId& g : all_isometries()) {
    for (const PillowPoint& q : sample) CHECK(member(3, CarpetSpace::Dp, isometry_apply(g, q)));
  }
}
