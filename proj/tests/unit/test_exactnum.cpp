#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "sierpinski/exactnum.hpp"

using namespace sierpinski;

namespace {

// Multiplicative order of p modulo n (n coprime to p, n > 1).
std::size_t order_mod(long p, long n) {
  long r = p % n;
  std::size_t k = 1;
  while (r != 1) {
    r = (r * p) % n;
    ++k;
  }
  return k;
}

long p_free_part(long d, long p) {
  while (d % p == 0) d /= p;
  return d;
}

bool is_power_of(long d, long p) { return p_free_part(d, p) == 1; }

}  // namespace

TEST_CASE("rational parsing, printing and arithmetic") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4") == Rational(-4));
  CHECK(Rational::parse("0/5").str() == "0");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::exception);
  CHECK_THROWS_AS(Rational::parse("x"), std::exception);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(int_pow(3, 4) == 81);
  CHECK(rational_pow(5, -2) == Rational(1, 25));
  CHECK_THROWS(require_odd_base(4));
  CHECK_THROWS(require_odd_base(1));
}

TEST_CASE("expansions of zero, one quarter and one third in base 3") {
  const auto zero = expand(Rational(0), 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].terminating());
  CHECK(digit_at(zero[0], 1000000) == 0);

  const auto quarter = expand(Rational(1, 4), 3);
  REQUIRE(quarter.size() == 1);
  CHECK(quarter[0].preperiod.empty());
  CHECK(quarter[0].period == std::vector<Digit>{0, 2});
  CHECK(digit_at(quarter[0], 1) == 0);
  CHECK(digit_at(quarter[0], 2) == 2);

  const auto third = expand(Rational(1, 3), 3);
  REQUIRE(third.size() == 2);
  CHECK(third[0].preperiod == std::vector<Digit>{1});
  CHECK(third[0].terminating());
  CHECK(third[1].preperiod == std::vector<Digit>{0});
  CHECK(third[1].period == std::vector<Digit>{2});
  CHECK(third[0].value() == Rational(1, 3));
  CHECK(third[1].value() == Rational(1, 3));

  CHECK_THROWS(digit_at(quarter[0], 0));
  CHECK_THROWS(expand(Rational(3, 2), 3));
}

TEST_CASE("one expands as the all-(p-1) stream") {
  for (long p : {3L, 5L, 7L}) {
    const auto one = expand(Rational(1), p);
    REQUIRE(one.size() == 1);
    CHECK(one[0].value() == Rational(1));
    for (std::size_t k = 1; k <= 5; ++k) CHECK(digit_at(one[0], k) == static_cast<Digit>(p - 1));
  }
}

TEST_CASE("eventually_avoids examples") {
  const auto q = expand(Rational(1, 4), 3)[0];
  const auto h = expand(Rational(1, 2), 3)[0];
  const auto t = expand(Rational(1, 3), 3);
  CHECK(eventually_avoids(q, q, {1, 1}));
  CHECK_FALSE(eventually_avoids(h, h, {1, 1}));
  CHECK_FALSE(eventually_avoids(t[0], t[0], {1, 1}));
  CHECK(eventually_avoids(t[1], t[1], {1, 1}));
  CHECK(first_forbidden_position(h, h, {1, 1}) == std::optional<std::size_t>(1));
}

TEST_CASE("round trip, expansion count and period length on small denominators") {
  for (long p : {3L, 5L, 7L}) {
    for (long d = 1; d <= 120; ++d) {
      for (long a = 0; a <= d; ++a) {
        if (std::gcd(a, d) != 1) continue;
        const Rational x(a, d);
        const auto es = expand(x, p);
        const bool two = is_power_of(d, p) && a > 0 && a < d;
        CHECK_MESSAGE(es.size() == (two ? 2u : 1u), x.str());
        for (const auto& e : es) CHECK_MESSAGE(e.value() == x, x.str());
        const long free = p_free_part(d, p);
        if (free > 1) CHECK((order_mod(p, free) % es[0].period.size()) == 0);
        // Canonical digits agree with repeated scaling.
        if (a < d) {
          for (unsigned k = 1; k <= 12; ++k) CHECK(digit_at(es[0], k) == oracle::digit(x, p, k));
        }
      }
    }
  }
}

TEST_CASE("round trip on sampled large denominators") {
  for (long d : {997L, 2187L, 4096L, 6561L, 9999L, 10000L}) {
    for (long a : {1L, 2L, d / 3, d / 2, d - 1}) {
      const Rational x(a, d);
      for (long p : {3L, 5L}) {
        for (const auto& e : expand(x, p)) CHECK(e.value() == x);
      }
    }
  }
}

TEST_CASE("the forbidden-pair decision is stable past the bound") {
  const long p = 3;
  std::vector<DigitExpansion> es;
  for (long d = 2; d <= 40; ++d) {
    for (long a = 1; a < d; a += 3) {
      for (const auto& e : expand(Rational(a, d), p)) es.push_back(e);
    }
  }
  for (std::size_t u = 0; u < es.size(); u += 7) {
    for (std::size_t v = 0; v < es.size(); v += 5) {
      const std::size_t bound = pair_decision_bound(es[u], es[v]);
      bool hit = false;
      for (std::size_t k = 1; k <= 2 * bound; ++k) hit = hit || (digit_at(es[u], k) == 1 && digit_at(es[v], k) == 1);
      CHECK(hit == !eventually_avoids(es[u], es[v], {1, 1}));
    }
  }
}

TEST_CASE("index digits") {
  CHECK(index_digits(4, 3, 2) == std::vector<Digit>{1, 1});
  CHECK(index_digits(5, 3, 3) == std::vector<Digit>{0, 1, 2});
  CHECK_THROWS(index_digits(9, 3, 2));
}
