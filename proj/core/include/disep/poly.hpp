#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "disep/numfield.hpp"

namespace disep {

struct VarId {
  std::size_t index = 0;
  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// Variable names plus the coefficient field. Shared by every polynomial built in it.
class Ring {
 public:
  Ring() : Ring(std::vector<std::string>{}) {}
  explicit Ring(std::vector<std::string> names, ExtensionDescriptor ext = {});

  std::size_t arity() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(VarId v) const { return data_->names.at(v.index); }
  const ExtensionDescriptor& ext() const { return data_->ext; }

  /// Throws DomainError for unknown names.
  VarId var(std::string_view name) const;
  std::optional<VarId> find(std::string_view name) const;

  /// Same variables over another coefficient field.
  Ring with_ext(const ExtensionDescriptor& ext) const { return Ring(names(), ext); }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.data_ == b.data_ || (a.data_->names == b.data_->names && a.data_->ext == b.data_->ext);
  }

 private:
  struct Data {
    std::vector<std::string> names;
    ExtensionDescriptor ext;
  };
  std::shared_ptr<const Data> data_;
};

using Exponents = std::vector<unsigned>;

/// Graded lexicographic: total degree first, then the later ring variable dominates.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, FieldElement, GrlexLess>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(const Ring& ring, const FieldElement& c);
  static MultiPoly constant(const Ring& ring, const Rational& c);
  static MultiPoly variable(const Ring& ring, VarId v);
  static MultiPoly variable(const Ring& ring, std::string_view name) { return variable(ring, ring.var(name)); }
  static MultiPoly monomial(const Ring& ring, Exponents exps, const FieldElement& c);

  const Ring& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The constant value; throws DomainError if not constant.
  FieldElement constant_value() const;

  unsigned degree_in(VarId v) const;
  unsigned total_degree() const;
  bool involves(VarId v) const { return degree_in(v) > 0; }
  /// Variables that occur with positive exponent, in ring order.
  std::vector<VarId> support() const;

  /// Grlex-maximal term. Throws DomainError on zero.
  const Exponents& leading_exponents() const;
  const FieldElement& leading_coefficient() const;

  FieldElement coefficient(const Exponents& exps) const;

  /// Adds c * x^exps in place.
  void add_term(const Exponents& exps, const FieldElement& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const FieldElement& c) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  /// Throws RingMismatch for different rings.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Full evaluation; `point` has one value per ring variable.
  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  /// Grlex-leading coefficient scaled to 1; zero stays zero.
  MultiPoly monic() const;

  /// Human-readable rendering, leading term first, e.g. "x1^2*x2 - 1/2*s + 3".
  std::string to_string() const;

 private:
  void require_same_ring(const MultiPoly& o) const;
  FieldElement coerce(const FieldElement& c) const;

  Ring ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

MultiPoly partial_derivative(const MultiPoly& p, VarId v);

/// c_0 .. c_d with p = sum c_i v^i; zero polynomial gives {0}.
std::vector<MultiPoly> coeffs_in_variable(const MultiPoly& p, VarId v);

/// Inverse of coeffs_in_variable.
MultiPoly from_coeffs(const std::vector<MultiPoly>& coeffs, VarId v);

/// b^2 - 4ac for p = a v^2 + b v + c. Throws DegreeError unless deg_v p == 2.
MultiPoly discriminant_in_variable(const MultiPoly& p, VarId v);

/// Same expression read formally for deg_v p <= 2 (missing coefficients are zero).
MultiPoly formal_discriminant(const MultiPoly& p, VarId v);

/// Simultaneous substitution inside the same ring.
MultiPoly substitute(const MultiPoly& p, const std::map<VarId, MultiPoly>& bindings);

/// Substitution into another ring: bound variables take the given images, the rest map by name.
MultiPoly substitute_into(const MultiPoly& p, const Ring& target, const std::map<VarId, MultiPoly>& bindings);

/// Same polynomial in `target`, matching variables by name; coefficients lifted if the field grows.
MultiPoly change_ring(const MultiPoly& p, const Ring& target);

/// Renames variables by an index permutation: variable i of p becomes variable perm[i].
MultiPoly permute_variables(const MultiPoly& p, const std::vector<std::size_t>& perm);

/// q with p = q * d, or nothing if d does not divide p. Throws DivisionByZero for d = 0.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);

/// s with a = s * b; nothing if either is zero while the other is not, or they are not proportional.
std::optional<FieldElement> proportionality(const MultiPoly& a, const MultiPoly& b);

/// Pseudo-remainder of a by b with respect to v.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, VarId v);

/// Monic greatest common divisor (grlex-leading coefficient 1); gcd(0, 0) = 0.
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

/// gcd of the coefficients of p viewed as a polynomial in v.
MultiPoly content_in(const MultiPoly& p, VarId v);

}  // namespace disep
