#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "disep/poly.hpp"

namespace disep {

enum class SeparabilityKind { strong, symmetric, weak, none };

std::string to_string(SeparabilityKind k);
SeparabilityKind separability_kind_from_string(const std::string& s);

/// How to read a discriminant when the degree in the eliminated variable drops below 2.
enum class DegreePolicy {
  strict,  ///< degree must be exactly 2; otherwise DegenerateInput
  formal,  ///< degree <= 2, read as a formal quadratic with vanishing top coefficients
};

struct Rank1Factorization {
  MultiPoly p;  ///< in u, grlex-leading coefficient 1
  MultiPoly q;  ///< in v, carries the scalar
};

/// Splits D(u, v) = p(u) q(v) when the coefficient grid of D has rank <= 1.
/// Other ring variables are treated as parameters. D = 0 gives nothing.
std::optional<Rank1Factorization> rank1_bivariate_factorization(const MultiPoly& d, VarId u, VarId v);

/// D_{x_i} F = scalar * f_j(x_j) * f_k(x_k) with both factors monic.
struct DiscriminantSplit {
  VarId eliminated;
  VarId first;
  VarId second;
  MultiPoly discriminant;
  std::optional<MultiPoly> first_factor;
  std::optional<MultiPoly> second_factor;
  std::optional<FieldElement> scalar;

  bool factored() const { return scalar.has_value(); }
};

struct SeparabilityCertificate {
  SeparabilityKind kind = SeparabilityKind::none;
  std::array<VarId, 3> vars{};
  /// splits[i] eliminates vars[i].
  std::array<DiscriminantSplit, 3> splits;
  /// For strong: the common quartic in the univariate ring {"x"}, positive leading coefficient.
  std::optional<MultiPoly> P;
  /// D = P_scale * P(x_j) P(x_k); 1 unless the common scalar is not a rational square.
  std::optional<FieldElement> P_scale;
  /// For symmetric: index into vars of the distinguished variable.
  std::optional<std::size_t> distinguished;

  /// Re-multiplies every stored factorization against its discriminant.
  bool remultiplication_exact() const;
};

/// Univariate ring {"x"} over the given field, used for extracted P and J.
Ring univariate_ring(const ExtensionDescriptor& ext = {}, const std::string& name = "x");

/// Moves a polynomial in the single variable v of its ring into univariate_ring(..., name).
MultiPoly to_univariate(const MultiPoly& p, VarId v, const std::string& name = "x");

/// Full certificate for F in the three main variables `vars`; other variables are parameters.
SeparabilityCertificate analyze_separability(const MultiPoly& f, const std::array<VarId, 3>& vars,
                                             DegreePolicy policy = DegreePolicy::strict);

/// F over a ring whose first three variables are x1, x2, x3.
SeparabilityCertificate check_strong_separability(const MultiPoly& f, DegreePolicy policy = DegreePolicy::strict);

SeparabilityKind classify_separability_kind(const MultiPoly& f, const std::array<VarId, 3>& vars,
                                            DegreePolicy policy = DegreePolicy::strict);

/// The quadratic system in the 27 unknowns a_ijk obtained by equating
/// D_{x_i} F with P(x_j) P(x_k) coefficient by coefficient.
struct SeparabilitySystem {
  Ring unknowns;                   ///< a000 .. a222, then A .. E when symbolic
  std::vector<MultiPoly> equations;  ///< 75 entries, 25 per eliminated variable
  std::vector<std::string> labels;   ///< e.g. "D_x3[x1^2 x2^0]"
};

/// P = A x^4 + B x^3 + C x^2 + D x + E with the given coefficients.
SeparabilitySystem generate_separability_system(const std::array<FieldElement, 5>& p_coeffs);
/// Same with A .. E as additional unknowns.
SeparabilitySystem generate_separability_system_symbolic();

/// a_ijk of F over a ring whose first three variables are x1, x2, x3 (degree <= 2 each), index 9i + 3j + k.
std::vector<FieldElement> coefficient_vector(const MultiPoly& f);

/// Values of every equation at the given a_ijk (and A .. E for a symbolic system).
std::vector<FieldElement> system_residuals(const SeparabilitySystem& sys, const std::vector<FieldElement>& values);

}  // namespace disep
