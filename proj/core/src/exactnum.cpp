#include "sierpinski/exactnum.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sierpinski {

namespace {

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.value_ == 0) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt int_pow(long base, unsigned exponent) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(std::labs(base)), exponent);
  if (base < 0 && (exponent % 2 == 1)) r = -r;
  return r;
}

Rational rational_pow(long base, int exponent) {
  if (exponent >= 0) return Rational(int_pow(base, static_cast<unsigned>(exponent)));
  return Rational(BigInt(1), int_pow(base, static_cast<unsigned>(-exponent)));
}

void require_odd_base(long p) {
  if (p < 3 || p % 2 == 0) {
    throw std::domain_error("base must be an odd integer >= 3, got " + std::to_string(p));
  }
}

Rational DigitExpansion::value() const {
  // sum_{k<=s} d_k p^-k + p^-s * (period as integer) / (p^L - 1)
  BigInt pre = 0;
  for (Digit d : preperiod) pre = pre * base + d;
  Rational v(pre, int_pow(base, static_cast<unsigned>(preperiod.size())));
  if (period.empty()) return v;
  BigInt per = 0;
  for (Digit d : period) per = per * base + d;
  const BigInt cycle = int_pow(base, static_cast<unsigned>(period.size())) - 1;
  v += Rational(per, cycle * int_pow(base, static_cast<unsigned>(preperiod.size())));
  return v;
}

std::string DigitExpansion::str() const {
  std::ostringstream os;
  os << "0.";
  for (Digit d : preperiod) os << d << ' ';
  os << '(';
  for (std::size_t i = 0; i < period.size(); ++i) os << (i ? " " : "") << period[i];
  os << ")_" << base;
  return os.str();
}

DigitExpansion expand_canonical(const Rational& x, long base) {
  require_odd_base(base);
  if (x < Rational(0) || x > Rational(1)) {
    throw std::domain_error("expand: value outside [0,1]: " + x.str());
  }
  DigitExpansion e;
  e.base = base;
  if (x == Rational(1)) {
    e.period = {static_cast<Digit>(base - 1)};
    return e;
  }
  // Long division; the remainder determines the tail value, so the first
  // repeated remainder delimits the minimal preperiod and period.
  const BigInt den = x.denominator();
  BigInt rem = x.numerator();
  std::map<BigInt, std::size_t> seen;
  std::vector<Digit> digits;
  while (rem != 0) {
    auto [it, fresh] = seen.emplace(rem, digits.size());
    if (!fresh) {
      e.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
      e.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
      return e;
    }
    const BigInt scaled = rem * base;
    BigInt q;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    digits.push_back(static_cast<Digit>(q.get_ui()));
  }
  e.preperiod = std::move(digits);
  return e;
}

std::vector<DigitExpansion> expand(const Rational& x, long base) {
  std::vector<DigitExpansion> out{expand_canonical(x, base)};
  const DigitExpansion& first = out.front();
  if (first.terminating() && !first.preperiod.empty()) {
    DigitExpansion alt = first;
    alt.preperiod.back() -= 1;
    alt.period = {static_cast<Digit>(base - 1)};
    out.push_back(std::move(alt));
  }
  return out;
}

Digit digit_at(const DigitExpansion& e, std::size_t k) {
  if (k == 0) throw std::domain_error("digit positions start at 1");
  if (k <= e.preperiod.size()) return e.preperiod[k - 1];
  if (e.period.empty()) return 0;
  return e.period[(k - 1 - e.preperiod.size()) % e.period.size()];
}

std::size_t pair_decision_bound(const DigitExpansion& ex, const DigitExpansion& ey) {
  const std::size_t lx = std::max<std::size_t>(ex.period.size(), 1);
  const std::size_t ly = std::max<std::size_t>(ey.period.size(), 1);
  return std::max(ex.preperiod.size(), ey.preperiod.size()) + std::lcm(lx, ly);
}

std::optional<std::size_t> first_forbidden_position(const DigitExpansion& ex,
                                                    const DigitExpansion& ey,
                                                    std::pair<Digit, Digit> forbidden) {
  if (ex.base != ey.base) throw std::domain_error("digit expansions in different bases");
  const std::size_t bound = pair_decision_bound(ex, ey);
  for (std::size_t k = 1; k <= bound; ++k) {
    if (digit_at(ex, k) == forbidden.first && digit_at(ey, k) == forbidden.second) return k;
  }
  return std::nullopt;
}

bool eventually_avoids(const DigitExpansion& ex, const DigitExpansion& ey,
                       std::pair<Digit, Digit> forbidden) {
  return !first_forbidden_position(ex, ey, forbidden).has_value();
}

std::vector<Digit> index_digits(std::uint64_t index, long base, std::size_t length) {
  std::vector<Digit> out(length, 0);
  for (std::size_t k = length; k-- > 0;) {
    out[k] = static_cast<Digit>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
  }
  if (index != 0) throw std::domain_error("index does not fit in the requested digit count");
  return out;
}

}  // namespace sierpinski
