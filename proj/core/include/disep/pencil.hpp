#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disep/classify.hpp"
#include "disep/poly.hpp"
#include "disep/report.hpp"

namespace disep {

/// Coefficients a0..a5 of C1 in tangential coordinates, each a polynomial in a parameter ring
/// (constants for a numeric conic, the variables a0..a5 for the symbolic one).
struct TangentialConic {
  std::array<MultiPoly, 6> a;

  static TangentialConic numeric(const std::array<Rational, 6>& values);
  static TangentialConic symbolic();

  const Ring& parameter_ring() const { return a[0].ring(); }
  /// Value of the tangential form at the line w.
  MultiPoly at_line(const std::array<MultiPoly, 3>& w) const;
};

enum class PencilKind { general, B, D, C22 };

std::string to_string(PencilKind k);
PencilKind pencil_kind_from_string(const std::string& s);

struct PencilModel {
  std::string provenance;
  Ring ring;                     ///< x1, x2, s, then the parameter variables
  TangentialConic conic;         ///< coefficients lifted into `ring`
  MultiPoly F, L, K, H;          ///< F = L s^2 + K s + H
  MultiPoly P;                   ///< in {x, parameters}
  MultiPoly J;                   ///< in {s, parameters}
  std::map<std::string, FieldElement> scalars;  ///< D_s = c_s P P, D_x1 = c_x1 J P, D_x2 = c_x2 J P
  Report report;                 ///< construction checks and printed-formula diffs

  VarId x1() const { return VarId{0}; }
  VarId x2() const { return VarId{1}; }
  VarId s() const { return VarId{2}; }
};

/// Determinant of a square matrix of polynomials (cofactor expansion).
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m);

/// Bordered determinant of the pencil in Darboux coordinates, L/K/H extraction, and comparison against the printed forms.
PencilModel tangential_pencil_equation(const TangentialConic& c);

/// Fills P, J and the scalars from the discriminant factorizations; records the checks in m.report.
/// Throws DegenerateInput if a discriminant is not rank one.
void extract_P_J(PencilModel& m);

/// Printed general-position L, K, H, P, J over the conic's parameter ring embedded in `ring`.
struct PrintedGeneral {
  MultiPoly L, K, H, P_x1, P_x2, J;
};
PrintedGeneral printed_general_forms(const PencilModel& m);

/// Parameter sets: B {a, a0, a1}; D {a, a3, a4}; C22 {a, a4, a5}.
std::array<Rational, 6> degenerate_conic_coefficients(PencilKind kind, const std::map<std::string, Rational>& params);

/// Builds the degenerate pencil, compares printed K, H, P, J and root structures.
/// Throws ParameterError for vanishing denominators or non-generic parameters.
PencilModel degenerate_pencil(PencilKind kind, const std::map<std::string, Rational>& params);

/// Generic random parameters for a degenerate kind.
std::map<std::string, Rational> random_degenerate_params(PencilKind kind, Rng& rng);

/// Substitutes the printed roots of J into F and compares with the printed degenerate conics.
/// For `general`, checks that J has exact degree 3 and that L is the image of the point conic of C2.
Report remark_identity_checks(PencilKind kind, const std::map<std::string, Rational>& params);

struct KowalevskiModel {
  Ring ring;  ///< s, x1, x2, then l1, l, c, k when symbolic
  MultiPoly Q;
  MultiPoly P;  ///< printed P in {x, ...}
  MultiPoly J;  ///< computed J in {s, ...}
  Report report;
};

KowalevskiModel build_kowalevski(const FieldElement& l1, const FieldElement& l, const FieldElement& c,
                                 const FieldElement& k);
KowalevskiModel build_kowalevski_symbolic();

/// j-invariant of y^2 = P for a square-free quartic or cubic over Q.
/// Throws SingularCurve for repeated roots, DomainError for other degrees.
Rational quartic_j_invariant(const MultiPoly& p);

/// Classical invariants I, J of a x^4 + b x^3 + c x^2 + d x + e.
std::pair<Rational, Rational> quartic_invariants(const std::array<Rational, 5>& abcde);

/// A conic tangent to the lines of C2 at the four contact parameters, built from the
/// tangential equation alone; `mix` selects a member of the two-dimensional solution space.
TangentialConic conic_through_contacts(const std::array<Rational, 4>& contacts, const Rational& mix);

}  // namespace disep
