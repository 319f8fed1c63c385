#pragma once

#include <map>
#include <string>
#include <vector>

#include "disep/mobius.hpp"
#include "disep/poly.hpp"
#include "disep/random.hpp"
#include "disep/report.hpp"
#include "disep/separability.hpp"

namespace disep {

enum class CaseTag { A, B, C1, C2, C3, C4, D, E1, E2, E3, E4, A1, A2, A3, A4 };

std::string to_string(CaseTag t);
CaseTag case_tag_from_string(const std::string& s);

/// The eleven families of the classification, in catalogue order.
const std::vector<CaseTag>& theorem1_tags();

/// Root family letter: 'A' .. 'E'.
char family_of(CaseTag t);

/// Parameter names for a tag: {"k"}, {"e"}, {"lambda","mu","nu"} or {}.
std::vector<std::string> parameter_names(CaseTag t);

class CanonicalCase {
 public:
  /// Validates the parameter constraints; throws ParameterError.
  CanonicalCase(CaseTag tag, std::map<std::string, FieldElement> params = {});

  CaseTag tag() const { return tag_; }
  const std::map<std::string, FieldElement>& params() const { return params_; }
  const FieldElement& param(const std::string& name) const;
  const ExtensionDescriptor& ext() const { return ext_; }

  std::string to_string() const;

 private:
  CaseTag tag_;
  std::map<std::string, FieldElement> params_;
  ExtensionDescriptor ext_;
};

/// Admissible rational parameters with |num|, |den| <= 9. C and E members get
/// lambda != 0 and nu != 0 so F keeps degree two in every variable.
CanonicalCase random_case(CaseTag tag, Rng& rng);

struct FamilyPolys {
  MultiPoly F;  ///< in x1, x2, x3
  MultiPoly P;  ///< in x
};

/// Ring {x1, x2, x3} over the given field.
Ring trivariate_ring(const ExtensionDescriptor& ext = {});

FamilyPolys canonical_family(const CanonicalCase& c);

/// Canonical P of a family letter over `ext`, in univariate_ring(ext).
MultiPoly canonical_P(const CanonicalCase& c);

/// P(x) evaluated on a ring variable.
MultiPoly univariate_in(const MultiPoly& p_of_x, const Ring& ring, VarId v);

/// The 75 equations generated from P vanish at the coefficient vector of F.
Report separability_system_check(const CanonicalCase& c);

/// D_xi(F) = P(xj) P(xk) for each variable, strong kind, P match up to sign, and the 75 residuals.
Report verify_theorem1_case(const CanonicalCase& c, DegreePolicy policy = DegreePolicy::strict);

struct RootStructure {
  std::vector<unsigned> partition;  ///< ascending, sums to the projective degree
  unsigned at_infinity = 0;

  std::string to_string() const;  ///< e.g. "(1,1,2)"
  friend bool operator==(const RootStructure&, const RootStructure&) = default;
};

/// Square-free decomposition over Q, with a root at infinity of multiplicity
/// projective_degree - deg P. Throws DomainError for P = 0, irrational coefficients, or deg P > projective_degree.
RootStructure root_structure(const MultiPoly& p, unsigned projective_degree = 4);

/// Binary form action: (c x + d)^n P((a x + b)/(c x + d)).
MultiPoly act_on_binary_form(const MultiPoly& p, const MobiusMap& m, unsigned n = 4);

/// The A-variant equivalences for the given k values.
Report proof_gauge_equivalences(const std::vector<Rational>& ks);

/// True iff h has only x1^2, x1 x2, x2^2 terms with equal x1^2 and x2^2 coefficients.
bool is_homography_form(const MultiPoly& h, VarId x1, VarId x2);

}  // namespace disep
