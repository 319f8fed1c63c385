#pragma once

#include <map>
#include <optional>
#include <string>

#include "disep/poly.hpp"

namespace disep {

/// x -> (a x + b) / (c x + d), defined up to a common scalar.
class MobiusMap {
 public:
  /// Throws DomainError when ad - bc = 0 or the entries use different descriptors.
  MobiusMap(FieldElement a, FieldElement b, FieldElement c, FieldElement d);

  static MobiusMap identity(const ExtensionDescriptor& ext = {});
  static MobiusMap negation() { return MobiusMap(-1, 0, 0, 1); }
  /// x -> 1 / (k x).
  static MobiusMap scaled_inversion(const FieldElement& k);

  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  const FieldElement& c() const { return c_; }
  const FieldElement& d() const { return d_; }
  const ExtensionDescriptor& ext() const { return a_.descriptor(); }
  FieldElement determinant() const { return a_ * d_ - b_ * c_; }

  /// (this o other)(x) = this(other(x)).
  MobiusMap compose(const MobiusMap& other) const;
  MobiusMap inverse() const;
  /// Image of a finite point; nothing for the pole.
  std::optional<FieldElement> apply(const FieldElement& x) const;

  /// Equality as projective maps (up to scalar).
  bool equivalent(const MobiusMap& other) const;

  std::string to_string() const;

 private:
  FieldElement a_, b_, c_, d_;
};

/// prod_i (c_i x_i + d_i)^{n_i} F(..., (a_i x_i + b_i)/(c_i x_i + d_i), ...).
/// Variables without a map are left alone. Throws DegreeError if deg_{x_i} F > n_i.
MultiPoly act_on_polynomial(const MultiPoly& f, const std::map<VarId, MobiusMap>& maps,
                            const std::map<VarId, unsigned>& bounds);

/// The same map and bound on every listed variable.
MultiPoly act_uniform(const MultiPoly& f, const std::vector<VarId>& vars, const MobiusMap& m, unsigned bound);

struct GaugeReport {
  bool equivalent = false;
  /// act(F) = scalar * G when equivalent.
  std::optional<FieldElement> scalar;
  MultiPoly image;
};

GaugeReport check_gauge_equivalence(const MultiPoly& f, const MultiPoly& g, const std::map<VarId, MobiusMap>& maps,
                                    const std::map<VarId, unsigned>& bounds);

}  // namespace disep
