#include "sierpinski/sampling.hpp"

#include <numeric>
#include <stdexcept>

#include "sierpinski/carpet.hpp"

namespace sierpinski {

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("empty sampling range");
  return engine_() % bound;
}

Rational Sampler::grid_coordinate(long p) {
  const BigInt den = int_pow(p, 6);
  const std::uint64_t k = below(den.get_ui() + 1);
  return Rational(BigInt(static_cast<unsigned long>(k)), den);
}

PillowPoint Sampler::pillow_point(long p) {
  const Face face = coin() ? Face::Back : Face::Front;
  Rational x = grid_coordinate(p);
  Rational y = grid_coordinate(p);
  return PillowPoint(face, std::move(x), std::move(y));
}

PillowPoint Sampler::front_point(long p) {
  Rational x = grid_coordinate(p);
  Rational y = grid_coordinate(p);
  return PillowPoint::front(std::move(x), std::move(y));
}

namespace {

DigitExpansion make_expansion(long p, std::vector<Digit> pre, std::vector<Digit> per) {
  DigitExpansion e;
  e.base = p;
  e.preperiod = std::move(pre);
  e.period = std::move(per);
  return e;
}

}  // namespace

PillowPoint Sampler::dp_member(long p) {
  const Face face = coin() ? Face::Back : Face::Front;
  if (draws_++ % 2 == 0) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const PillowPoint q(face, grid_coordinate(p), grid_coordinate(p));
      if (member(p, CarpetSpace::Dp, q)) return q;
    }
    throw std::logic_error("rejection sampling of D_p failed");
  }
  const Digit m = middle_digit(p);
  auto pair_stream = [&](std::size_t len, std::vector<Digit>& xs, std::vector<Digit>& ys) {
    for (std::size_t k = 0; k < len; ++k) {
      Digit a, b;
      do {
        a = static_cast<Digit>(below(static_cast<std::uint64_t>(p)));
        b = static_cast<Digit>(below(static_cast<std::uint64_t>(p)));
      } while (a == m && b == m);
      xs.push_back(a);
      ys.push_back(b);
    }
  };
  std::vector<Digit> xpre, ypre, xper, yper;
  pair_stream(below(4), xpre, ypre);
  pair_stream(1 + below(3), xper, yper);
  const Rational x = make_expansion(p, xpre, xper).value();
  const Rational y = make_expansion(p, ypre, yper).value();
  return PillowPoint(face, x, y);
}

Rational Sampler::cantor_point(long p) {
  const Digit m = middle_digit(p);
  auto stream = [&](std::size_t len) {
    std::vector<Digit> out;
    for (std::size_t k = 0; k < len; ++k) {
      Digit d;
      do {
        d = static_cast<Digit>(below(static_cast<std::uint64_t>(p)));
      } while (d == m);
      out.push_back(d);
    }
    return out;
  };
  std::vector<Digit> pre = stream(below(4));
  std::vector<Digit> per = coin() ? stream(1 + below(3)) : std::vector<Digit>{};
  return make_expansion(p, std::move(pre), std::move(per)).value();
}

std::vector<PillowPoint> dp_sample(long p, std::size_t n, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<PillowPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(s.dp_member(p));
  return out;
}

std::vector<PillowPoint> pillow_sample(long p, std::size_t n, std::uint64_t seed) {
  Sampler s(seed);
  std::vector<PillowPoint> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(s.pillow_point(p));
  return out;
}

std::vector<PillowPoint> front_grid_sample(std::size_t n) {
  std::vector<PillowPoint> out;
  out.reserve(n);
  for (long d = 1; out.size() < n; ++d) {
    for (long a = 0; a <= d && out.size() < n; ++a) {
      for (long b = 0; b <= d && out.size() < n; ++b) {
        // Only reduced fractions in at least one coordinate, so each point
        // appears once across denominators.
        if (std::gcd(std::gcd(a, b), d) != 1) continue;
        out.push_back(PillowPoint::front(Rational(a, d), Rational(b, d)));
      }
    }
  }
  return out;
}

}  // namespace sierpinski
