#include "disep/rational.hpp"

#include <cctype>
#include <ostream>

#include "disep/errors.hpp"

namespace disep {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  std::string_view den = text.substr(slash + 1);
  if (!den.empty() && (den.front() == '-' || den.front() == '+'))
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  const Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash)), d);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::pow(unsigned exponent) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exponent);
  return Rational(n, d);
}

std::string Rational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

std::optional<Rational> rational_sqrt_exact(const Rational& r) {
  if (r.sign() < 0) throw DomainError("square root of negative rational " + r.to_string());
  const Integer n = r.numerator();
  const Integer d = r.denominator();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  Integer sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw DomainError("square-free part of zero");
  Integer m = abs(n);
  Integer result = 1;
  constexpr unsigned long kTrialBound = 1000000;
  for (unsigned long p = 2; p <= kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p) == 0) continue;
    unsigned count = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++count;
    }
    if (count % 2 == 1) result *= p;
  }
  if (m > 1) {
    if (mpz_perfect_square_p(m.get_mpz_t()) == 0) {
      // A cofactor with no prime below the bound is square-free only if it
      // cannot hide a repeated prime larger than the bound.
      Integer bound3 = Integer(kTrialBound);
      bound3 = bound3 * bound3 * bound3;
      if (m >= bound3) throw DomainError("integer too large for square-free factorization: " + n.get_str());
      result *= m;
    }
  }
  return sgn(n) < 0 ? Integer(-result) : result;
}

std::pair<Integer, Rational> squarefree_decompose(const Rational& r) {
  if (r.is_zero()) throw DomainError("square-free decomposition of zero");
  // r = n/d = n*d / d^2
  const Integer nd = r.numerator() * r.denominator();
  const Integer d = squarefree_part(nd);
  // m^2 = r / d
  const Rational m2 = r / Rational(d);
  auto m = rational_sqrt_exact(m2);
  if (!m) throw DomainError("internal: square-free decomposition failed for " + r.to_string());
  return {d, *m};
}

}  // namespace disep
