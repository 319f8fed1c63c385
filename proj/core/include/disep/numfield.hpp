#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disep/rational.hpp"

namespace disep {

/// The field Q(sqrt d1, sqrt d2) with zero, one or two adjoined square roots.
///
/// Radicands are square-free integers outside {0, 1}; with two radicands
/// their product must not be a perfect square, so the algebra is a field of
/// degree 4 with basis {1, sqrt d1, sqrt d2, sqrt(d1 d2)}.
class ExtensionDescriptor {
 public:
  ExtensionDescriptor() = default;
  explicit ExtensionDescriptor(std::span<const long> radicands);
  ExtensionDescriptor(std::initializer_list<long> radicands)
      : ExtensionDescriptor(std::span<const long>(radicands.begin(), radicands.size())) {}

  static ExtensionDescriptor rational() { return {}; }

  std::size_t radicand_count() const { return count_; }
  std::span<const long> radicands() const { return {radicands_.data(), count_}; }
  long radicand(std::size_t i) const { return radicands_[i]; }
  /// Dimension over Q: 1, 2 or 4.
  std::size_t degree() const { return std::size_t{1} << count_; }
  bool is_rational() const { return count_ == 0; }

  /// Every radicand of `other` also occurs here (so Q-linear embedding exists).
  bool contains(const ExtensionDescriptor& other) const;

  /// Smallest descriptor containing both; throws DomainError if it would need three radicands.
  static ExtensionDescriptor join(const ExtensionDescriptor& a, const ExtensionDescriptor& b);

  friend bool operator==(const ExtensionDescriptor&, const ExtensionDescriptor&) = default;

  std::string to_string() const;

 private:
  std::array<long, 2> radicands_{0, 0};
  std::size_t count_ = 0;
};

/// Exact element of Q or of a (bi)quadratic extension.
///
/// Coordinates are over the basis {1}, {1, sqrt d1} or
/// {1, sqrt d1, sqrt d2, sqrt(d1 d2)}. Arithmetic requires equal descriptors;
/// embedding into a larger field goes through `lift`.
class FieldElement {
 public:
  /// Zero of Q.
  FieldElement() : coords_(1) {}
  FieldElement(const Rational& r) : coords_{r} {}  // NOLINT: Q embeds implicitly into itself
  FieldElement(long v) : coords_{Rational(v)} {}    // NOLINT
  FieldElement(const Rational& r, const ExtensionDescriptor& ext);
  FieldElement(std::vector<Rational> coords, const ExtensionDescriptor& ext);

  static FieldElement zero(const ExtensionDescriptor& ext) { return FieldElement(Rational(0), ext); }
  static FieldElement one(const ExtensionDescriptor& ext) { return FieldElement(Rational(1), ext); }
  /// sqrt(d) for a square-free radicand d of the descriptor, or sqrt(d1 d2) reduced.
  static std::optional<FieldElement> sqrt_of_rational(const Rational& r, const ExtensionDescriptor& ext);

  /// Embeds `x` into `target`, which must contain x's descriptor.
  static FieldElement lift(const FieldElement& x, const ExtensionDescriptor& target);

  const ExtensionDescriptor& descriptor() const { return ext_; }
  std::span<const Rational> coords() const { return coords_; }
  const Rational& coord(std::size_t i) const { return coords_[i]; }

  bool is_zero() const;
  bool is_one() const;
  /// True when every irrational coordinate vanishes.
  bool is_rational() const;
  /// The rational value; throws DomainError if irrational.
  const Rational& to_rational() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  /// Throws DescriptorMismatch when descriptors differ.
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  /// Conjugate-norm inverse; throws DivisionByZero for zero.
  FieldElement inverse() const;
  /// Galois conjugate flipping the sign of sqrt(d_i) for each bit set in `mask`.
  FieldElement conjugate(unsigned mask) const;
  FieldElement pow(unsigned e) const;

  /// Canonical text such as "3", "1/2", "1+2*sqrt(2)".
  std::string to_string() const;

 private:
  void require_same(const FieldElement& o) const;

  std::vector<Rational> coords_;
  ExtensionDescriptor ext_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

}  // namespace disep
