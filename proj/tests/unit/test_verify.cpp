#include <doctest.h>

#include <json.hpp>

#include "oracles.hpp"
#include "sierpinski/carpet.hpp"
#include "sierpinski/verify.hpp"

using namespace sierpinski;

TEST_CASE("grid oracle examples") {
  const GridOracle o1(3, 1);
  CHECK_FALSE(oracle_member(o1, PillowPoint::front(Rational(1, 2), Rational(1, 2))));
  CHECK(oracle_member(o1, PillowPoint::front(Rational(1, 3), Rational(1, 2))));
  for (unsigned n = 0; n <= 6; ++n) CHECK(oracle_member(GridOracle(3, n), PillowPoint::front(Rational(0), Rational(0))));
  CHECK_THROWS(GridOracle(3, 7));
  CHECK_THROWS(GridOracle(5, 5));
}

TEST_CASE("grid oracle matrices match digit goodness") {
  for (long p : {3L, 5L}) {
    const GridOracle o(p, 3);
    const Index s = side_count(p, 3);
    for (Index i = 0; i < s; ++i) {
      for (Index j = 0; j < s; ++j) {
        const bool good = oracle::tile_good(p, 3, BigInt(static_cast<unsigned long>(i)), BigInt(static_cast<unsigned long>(j)));
        CHECK(o.good({Face::Front, 3, i, j}) == good);
        CHECK(o.good({Face::Back, 3, i, j}) == good);
      }
    }
  }
}

TEST_CASE("grid oracle agrees with the digit criterion at level 4 for p = 3") {
  const GridOracle o(3, 4);
  for (Index a = 0; a <= 81; ++a) {
    for (Index b = 0; b <= 81; ++b) {
      for (Face f : {Face::Front, Face::Back}) {
        const PillowPoint q(f, Rational(BigInt(static_cast<unsigned long>(a)), BigInt(81)),
                            Rational(BigInt(static_cast<unsigned long>(b)), BigInt(81)));
        CHECK(oracle_member(o, q) == member(3, CarpetSpace::Dp, q));
      }
    }
  }
}

TEST_CASE("suite on p = 3 passes and reports deterministically") {
  SuiteOptions o;
  o.levels = SuiteLevels::defaults(3);
  o.levels.cross_m = 1;  // the full cross-region sweep runs in the acceptance test
  o.timings = false;
  const VerificationReport a = run_suite(3, o);
  for (const ClaimResult& c : a.claims) CHECK_MESSAGE(c.status == ClaimStatus::Pass, (c.id + ": " + c.witness));
  CHECK(a.all_passed());
  CHECK(a.claims.size() == 12);
  const std::string json = a.to_json();
  CHECK(json == run_suite(3, o).to_json());
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["suite"] == "sierpinski");
  CHECK(parsed["p"] == 3);
  CHECK(parsed["seed"] == 0);
  CHECK(parsed["claims"].size() == 12);
  for (const auto& c : parsed["claims"]) {
    CHECK(c.contains("anchor"));
    CHECK(c["witness"].is_null());
    CHECK(c["millis"] == 0);
  }
}

TEST_CASE("a corrupted color rule is caught with a witnessing pair") {
  SuiteOptions o;
  o.levels = SuiteLevels::defaults(3);
  o.color_rule = [](const TileAddress& t) { return t.face == Face::Front ? TileColor::White : TileColor::Black; };
  const ClaimResult c = claim_checkerboard(3, o);
  CHECK(c.status == ClaimStatus::Fail);
  CHECK(c.witness.find("share a side") != std::string::npos);

  VerificationReport r;
  r.claims.push_back(c);
  CHECK_FALSE(r.all_passed());
  CHECK(nlohmann::json::parse(r.to_json())["claims"][0]["status"] == "fail");
}
