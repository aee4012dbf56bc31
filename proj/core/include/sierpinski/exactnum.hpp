#pragma once

// Exact rationals and base-p digit expansions.
//
// Every coordinate in this library is a Rational. Digit expansions are kept
// in eventually-periodic form (preperiod + period) so that questions about
// infinitely many digits can be settled after finitely many positions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace sierpinski {

using BigInt = mpz_class;

/// Exact rational in lowest terms with positive denominator.
class Rational {
public:
  Rational() = default;
  Rational(long value) : value_(value) {}                        // NOLINT
  Rational(const BigInt& value) : value_(value) {}               // NOLINT
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "k" or "num/den" (decimal, optional leading '-').
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Largest integer <= value.
  BigInt floor() const;
  /// Smallest integer >= value.
  BigInt ceil() const;

  double to_double() const { return value_.get_d(); }
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  const mpq_class& raw() const { return value_; }

private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// base^exponent as an exact integer.
BigInt int_pow(long base, unsigned exponent);
/// base^exponent as a Rational (exponent may be negative).
Rational rational_pow(long base, int exponent);

/// Throws std::domain_error unless p is an odd integer >= 3.
void require_odd_base(long p);

using Digit = std::uint32_t;

/// Eventually periodic base-p expansion 0.d1 d2 d3 ... of a number in [0,1].
///
/// An empty period stands for trailing zeros (terminating expansion).
struct DigitExpansion {
  long base = 3;
  std::vector<Digit> preperiod;
  std::vector<Digit> period;

  bool terminating() const { return period.empty(); }
  /// Reconstructs the exact value (preperiod plus geometric series of the period).
  Rational value() const;
  std::string str() const;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

/// All base-p expansions of x in [0,1]: two for x = k/p^j strictly inside
/// (0,1), one otherwise. The terminating form comes first.
std::vector<DigitExpansion> expand(const Rational& x, long base);

/// Only the canonical expansion (terminating form when there are two).
DigitExpansion expand_canonical(const Rational& x, long base);

/// k-th digit after the radix point, k >= 1.
Digit digit_at(const DigitExpansion& e, std::size_t k);

/// Number of positions after which the digit pair stream of (ex, ey) repeats:
/// max(preperiods) + lcm(period lengths).
std::size_t pair_decision_bound(const DigitExpansion& ex, const DigitExpansion& ey);

/// First position k >= 1 with (digit_at(ex,k), digit_at(ey,k)) == forbidden,
/// if any.
std::optional<std::size_t> first_forbidden_position(const DigitExpansion& ex,
                                                    const DigitExpansion& ey,
                                                    std::pair<Digit, Digit> forbidden);

/// True iff no position carries the forbidden digit pair.
bool eventually_avoids(const DigitExpansion& ex, const DigitExpansion& ey,
                       std::pair<Digit, Digit> forbidden);

/// Base-p digits of an integer index, most significant first, padded to length.
std::vector<Digit> index_digits(std::uint64_t index, long base, std::size_t length);

}  // namespace sierpinski
