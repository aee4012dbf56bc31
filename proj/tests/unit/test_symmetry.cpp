#include <doctest.h>

#include "oracles.hpp"
#include "sierpinski/carpet.hpp"
#include "sierpinski/symmetry.hpp"

using namespace sierpinski;

namespace {
using Tag = FixedSetClass::Tag;

Tag expected_tag(const IsometryId& g) {
  const bool reflection = g.square == SquareSymmetry::DMain || g.square == SquareSymmetry::DAnti ||
                          g.square == SquareSymmetry::HMid || g.square == SquareSymmetry::VMid;
  if (g.square == SquareSymmetry::Id) return g.swap ? Tag::JordanCurveO : Tag::All;
  if (reflection) return g.swap ? Tag::Finite : Tag::Cantor;
  return Tag::Empty;  // rotations fix only the centre, which is removed
}
}  // namespace

TEST_CASE("fixed-set taxonomy of the sixteen isometries") {
  for (long p : {3L, 5L}) {
    const auto points = oracle::rational_points(12);
    for (const IsometryId& g : all_isometries()) {
      const FixedSetClass c = fixed_set_classify(g, p, 4);
      CHECK_MESSAGE(c.tag == expected_tag(g), (g.str() + " -> " + c.str()));
      if (c.tag == Tag::Finite) CHECK(c.count == 2);
      for (const PillowPoint& q : c.points) {
        CHECK(isometry_apply(g, q) == q);
        CHECK(member(p, CarpetSpace::Dp, q));
      }
      if (c.tag != Tag::Finite && c.tag != Tag::Empty) continue;
      // Every fixed point found by brute force on small rationals is listed.
      for (const PillowPoint& q : points) {
        if (isometry_apply(g, q) == q && member(p, CarpetSpace::Dp, q)) {
          CHECK(std::find(c.points.begin(), c.points.end(), q) != c.points.end());
        }
      }
    }
  }
}

TEST_CASE("examples and text forms") {
  CHECK(fixed_set_classify(IsometryId::identity(), 3, 3).str() == "all");
  CHECK(fixed_set_classify(IsometryId::face_swap(), 3, 3).str() == "jordan-curve-O");
  CHECK(fixed_set_classify(IsometryId::parse("dmain"), 3, 3).str() == "cantor");
  const FixedSetClass hr = fixed_set_classify(IsometryId::parse("hmid+R"), 3, 3);
  CHECK(hr.str() == "finite 2");
  CHECK(hr.points == std::vector<PillowPoint>{PillowPoint::front(Rational(0), Rational(1, 2)),
                                              PillowPoint::front(Rational(1), Rational(1, 2))});
  CHECK_THROWS(fixed_set_classify(IsometryId::identity(), 3, 2));
}

TEST_CASE("the diagonal meets the carpet in the product of the Cantor set with itself") {
  const long p = 3;
  const Index s = side_count(p, 6);
  const BigInt den(static_cast<unsigned long>(s));
  for (Index a = 0; a <= s; ++a) {
    const Rational t(BigInt(static_cast<unsigned long>(a)), den);
    const bool on_grid = oracle::square_member(p, t, t, 6);
    CHECK(member(p, CarpetSpace::SpFront, PillowPoint::front(t, t)) == on_grid);
    CHECK(cantor_member(p, t) == on_grid);
  }
}
