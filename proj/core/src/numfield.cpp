#include "disep/numfield.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "disep/errors.hpp"

namespace disep {

namespace {

bool is_square_free(long d) {
  if (d == 0) return false;
  unsigned long m = d < 0 ? static_cast<unsigned long>(-(d + 1)) + 1 : static_cast<unsigned long>(d);
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

ExtensionDescriptor::ExtensionDescriptor(std::span<const long> radicands) {
  if (radicands.size() > 2) throw DomainError("at most two radicands are supported");
  for (long d : radicands) {
    if (d == 0 || d == 1 || !is_square_free(d))
      throw DomainError("radicand must be square-free and not 0 or 1: " + std::to_string(d));
  }
  if (radicands.size() == 2) {
    const Integer prod = Integer(radicands[0]) * radicands[1];
    if (prod >= 0 && mpz_perfect_square_p(prod.get_mpz_t()) != 0)
      throw DomainError("radicand product is a perfect square");
  }
  count_ = radicands.size();
  std::copy(radicands.begin(), radicands.end(), radicands_.begin());
}

bool ExtensionDescriptor::contains(const ExtensionDescriptor& other) const {
  for (long d : other.radicands()) {
    if (std::find(radicands().begin(), radicands().end(), d) != radicands().end()) continue;
    // sqrt(d) may still be the reduced sqrt(d1 d2).
    if (count_ == 2) {
      const long g = std::gcd(radicands_[0], radicands_[1]);
      const long reduced = (radicands_[0] / g) * (radicands_[1] / g);
      if (reduced == d) continue;
    }
    return false;
  }
  return true;
}

ExtensionDescriptor ExtensionDescriptor::join(const ExtensionDescriptor& a, const ExtensionDescriptor& b) {
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  std::vector<long> all(a.radicands().begin(), a.radicands().end());
  for (long d : b.radicands()) {
    if (!a.contains(ExtensionDescriptor{d})) all.push_back(d);
  }
  if (all.size() > 2) throw DomainError("joining " + a.to_string() + " and " + b.to_string() + " needs three radicands");
  return ExtensionDescriptor(all);
}

std::string ExtensionDescriptor::to_string() const {
  std::string out = "Q";
  for (long d : radicands()) out += "(sqrt " + std::to_string(d) + ")";
  return out;
}

FieldElement::FieldElement(const Rational& r, const ExtensionDescriptor& ext) : coords_(ext.degree()), ext_(ext) {
  coords_[0] = r;
}

FieldElement::FieldElement(std::vector<Rational> coords, const ExtensionDescriptor& ext)
    : coords_(std::move(coords)), ext_(ext) {
  if (coords_.size() != ext.degree())
    throw DomainError("coordinate count " + std::to_string(coords_.size()) + " does not match " + ext.to_string());
}

std::optional<FieldElement> FieldElement::sqrt_of_rational(const Rational& r, const ExtensionDescriptor& ext) {
  if (r.is_zero()) return FieldElement::zero(ext);
  const auto [d, m] = squarefree_decompose(r);
  if (d == 1) return FieldElement(m, ext);
  if (!d.fits_slong_p()) return std::nullopt;
  const long dl = d.get_si();
  std::vector<Rational> c(ext.degree());
  for (std::size_t i = 0; i < ext.radicand_count(); ++i) {
    if (ext.radicand(i) == dl) {
      c[std::size_t{1} << i] = m;
      return FieldElement(std::move(c), ext);
    }
  }
  if (ext.radicand_count() == 2) {
    const long g = std::gcd(ext.radicand(0), ext.radicand(1));
    if ((ext.radicand(0) / g) * (ext.radicand(1) / g) == dl) {
      // sqrt(d1 d2) = g * sqrt(dl)  =>  sqrt(dl) = sqrt(d1 d2) / g
      c[3] = m / Rational(g);
      return FieldElement(std::move(c), ext);
    }
  }
  return std::nullopt;
}

FieldElement FieldElement::lift(const FieldElement& x, const ExtensionDescriptor& target) {
  if (x.ext_ == target) return x;
  if (!target.contains(x.ext_))
    throw DescriptorMismatch("cannot lift " + x.ext_.to_string() + " into " + target.to_string());
  FieldElement out = FieldElement::zero(target);
  out.coords_[0] = x.coords_[0];
  if (x.ext_.radicand_count() == 0) return out;
  // Express each source basis element in the target basis and accumulate.
  auto basis_image = [&](long d) { return *sqrt_of_rational(Rational(d), target); };
  const FieldElement e1 = basis_image(x.ext_.radicand(0));
  out += FieldElement(x.coords_[1], target) * e1;
  if (x.ext_.radicand_count() == 2) {
    const FieldElement e2 = basis_image(x.ext_.radicand(1));
    out += FieldElement(x.coords_[2], target) * e2;
    out += FieldElement(x.coords_[3], target) * e1 * e2;
  }
  return out;
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool FieldElement::is_one() const { return coords_[0].is_one() && is_rational(); }

bool FieldElement::is_rational() const {
  return std::all_of(coords_.begin() + 1, coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

const Rational& FieldElement::to_rational() const {
  if (!is_rational()) throw DomainError("field element " + to_string() + " is not rational");
  return coords_[0];
}

void FieldElement::require_same(const FieldElement& o) const {
  if (!(ext_ == o.ext_))
    throw DescriptorMismatch("field elements over " + ext_.to_string() + " and " + o.ext_.to_string());
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  require_same(o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  a.require_same(b);
  const auto& x = a.coords_;
  const auto& y = b.coords_;
  switch (a.ext_.radicand_count()) {
    case 0:
      return FieldElement(x[0] * y[0]);
    case 1: {
      const Rational d(a.ext_.radicand(0));
      return FieldElement({x[0] * y[0] + d * x[1] * y[1], x[0] * y[1] + x[1] * y[0]}, a.ext_);
    }
    default: {
      // e1^2 = d1, e2^2 = d2, e3 = e1 e2, e3^2 = d1 d2, e1 e3 = d1 e2, e2 e3 = d2 e1
      const Rational d1(a.ext_.radicand(0));
      const Rational d2(a.ext_.radicand(1));
      const Rational d12 = d1 * d2;
      std::vector<Rational> z(4);
      z[0] = x[0] * y[0] + d1 * x[1] * y[1] + d2 * x[2] * y[2] + d12 * x[3] * y[3];
      z[1] = x[0] * y[1] + x[1] * y[0] + d2 * (x[2] * y[3] + x[3] * y[2]);
      z[2] = x[0] * y[2] + x[2] * y[0] + d1 * (x[1] * y[3] + x[3] * y[1]);
      z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] + x[2] * y[1];
      return FieldElement(std::move(z), a.ext_);
    }
  }
}

FieldElement& FieldElement::operator*=(const FieldElement& o) { return *this = *this * o; }

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.require_same(b);
  return a.coords_ == b.coords_;
}

FieldElement FieldElement::conjugate(unsigned mask) const {
  FieldElement out = *this;
  if (ext_.radicand_count() >= 1 && (mask & 1U)) {
    out.coords_[1] = -out.coords_[1];
    if (ext_.radicand_count() == 2) out.coords_[3] = -out.coords_[3];
  }
  if (ext_.radicand_count() == 2 && (mask & 2U)) {
    out.coords_[2] = -out.coords_[2];
    out.coords_[3] = -out.coords_[3];
  }
  return out;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero field element");
  // Product of the non-trivial conjugates; x * conj_product is the (rational) norm.
  FieldElement conj_product = FieldElement::one(ext_);
  const unsigned n = 1U << ext_.radicand_count();
  for (unsigned mask = 1; mask < n; ++mask) conj_product *= conjugate(mask);
  const FieldElement norm = *this * conj_product;
  const Rational inv = norm.to_rational().inverse();
  for (auto& c : conj_product.coords_) c *= inv;
  return conj_product;
}

FieldElement FieldElement::pow(unsigned e) const {
  FieldElement result = FieldElement::one(ext_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string FieldElement::to_string() const {
  if (is_rational()) return coords_[0].to_string();
  std::vector<std::string> basis{"1"};
  if (ext_.radicand_count() >= 1) basis.push_back("sqrt(" + std::to_string(ext_.radicand(0)) + ")");
  if (ext_.radicand_count() == 2) {
    basis.push_back("sqrt(" + std::to_string(ext_.radicand(1)) + ")");
    basis.push_back("sqrt(" + std::to_string(ext_.radicand(0) * ext_.radicand(1)) + ")");
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag;
    } else if (mag.is_one()) {
      os << basis[i];
    } else {
      os << mag << "*" << basis[i];
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

}  // namespace disep
