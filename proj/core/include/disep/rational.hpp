#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace disep {

/// Arbitrary-precision integer (thin alias over GMP).
using Integer = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}  // NOLINT: implicit by design of numeric literals
  Rational(long num, long den);
  Rational(const Integer& num, const Integer& den = 1);
  explicit Rational(mpq_class value);

  /// Parses "p/q" or "p" (optional sign, decimal digits only).
  static Rational parse(std::string_view text);

  Integer numerator() const { return v_.get_num(); }
  Integer denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow(unsigned exponent) const;

  /// "p/q", with "/q" omitted when q = 1.
  std::string to_string() const;
  double to_double() const { return v_.get_d(); }

  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Returns s with s*s == r when r is the square of a rational; throws DomainError for r < 0.
std::optional<Rational> rational_sqrt_exact(const Rational& r);

/// Square-free part of a nonzero integer, keeping the sign: n = sqfree * m^2.
/// Throws DomainError if the cofactor left after trial division is too large to certify.
Integer squarefree_part(const Integer& n);

/// Square-free integer d and rational m with r = d * m^2 (d = 1 when r is a square); r != 0.
std::pair<Integer, Rational> squarefree_decompose(const Rational& r);

}  // namespace disep
