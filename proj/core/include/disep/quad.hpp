#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "disep/classify.hpp"
#include "disep/poly.hpp"
#include "disep/report.hpp"

namespace disep {

/// Ring x1, x2, x3, x4 of the quadrilateral vertices.
Ring quad_ring(const ExtensionDescriptor& ext = {});

/// Biquadratic polynomial attached to the edge (u, v) of a quadrilateral.
struct BiquadraticEdge {
  MultiPoly h;
  VarId u{0};
  VarId v{1};
  FieldElement parameter;
  FieldElement normalization{1};  ///< sqrt P(parameter)
  Report report;

  /// Same polynomial with (u, v) renamed to (to_u, to_v).
  BiquadraticEdge on(VarId to_u, VarId to_v) const;
  BiquadraticEdge negated() const;
};

/// Normalized edge F(x1, x2, alpha)/sqrt(P(alpha)) on vertices (x1, x2).
/// Records the checks delta_x1 = P(x2) and delta_x2 = P(x1) in the edge report.
BiquadraticEdge h_hat(const CanonicalCase& c, const FieldElement& alpha);

/// Q_x Q_y - Q Q_xy for multiaffine Q.
MultiPoly delta_pair(const MultiPoly& q, VarId x, VarId y);
/// h_x^2 - 2 h h_xx for h of degree <= 2 in x.
MultiPoly delta_single(const MultiPoly& h, VarId x);

enum class EdgeSignConvention { alternating, uniform };

std::string to_string(EdgeSignConvention c);
EdgeSignConvention edge_sign_convention_from_string(const std::string& s);

struct MultiaffineQ {
  MultiPoly Q;
  FieldElement alpha;
  FieldElement beta;
  std::size_t nullspace_dimension = 0;
  Report report;  ///< multiaffinity and the four delta post-checks
};

/// Solves 2 Q_x1 (h12 h34 - h14 h23) = Q (h12_x1 h34 - h14_x1 h23 + h23 h34_x3 - h23_x3 h34)
/// for the 16 coefficients of Q. Q is normalized to grlex-leading coefficient 1.
MultiaffineQ synthesize_quad_equation(const BiquadraticEdge& h12, const BiquadraticEdge& h23,
                                      const BiquadraticEdge& h34, const BiquadraticEdge& h14);

/// Edges from h_hat with alpha on (x1,x2),(x3,x4) and beta on (x2,x3),(x1,x4).
/// The alternating convention negates the beta edges.
MultiaffineQ quad_for_case(const CanonicalCase& c, const FieldElement& alpha, const FieldElement& beta,
                           EdgeSignConvention convention = EdgeSignConvention::alternating);

/// All p/q with |p|, q <= bound and P(p/q) a nonzero rational square, ascending.
std::vector<Rational> find_square_parameters(const CanonicalCase& c, unsigned bound);

enum class QuadType { Q, H };
std::string to_string(QuadType t);

struct QuadClassification {
  QuadType type = QuadType::H;
  /// Accompanying biquadratics in the order h12, h23, h34, h14.
  std::array<bool, 4> nondegenerate{};
  std::array<MultiPoly, 4> accompanying;
};

/// True iff no Moebius image of h(x, y) is divisible by x - c or y - c.
bool biquadratic_nondegenerate(const MultiPoly& h, VarId x, VarId y);
QuadClassification classify_type_QH(const MultiPoly& q);

struct ConsistencyReport {
  std::size_t trials = 0;
  std::size_t agreements = 0;
  std::size_t failures = 0;
  std::size_t singular_resamples = 0;
  QuadType type = QuadType::H;
  std::array<bool, 4> edges_nondegenerate{};
  std::uint64_t seed = 0;
  std::string convention;
  std::vector<std::string> witnesses;  ///< initial data of the first few failing trials

  bool passed() const { return trials > 0 && failures == 0 && agreements == trials; }
  /// Counts are additive; witnesses are concatenated.
  void merge(const ConsistencyReport& other);
};

/// Cube faces carry Q_ij(x, x_i, x_ij, x_j) in the slots (x1, x2, x3, x4).
ConsistencyReport check_cube_consistency(const MultiPoly& q12, const MultiPoly& q13, const MultiPoly& q23,
                                         std::size_t trials, std::uint64_t seed, unsigned threads = 1);

ConsistencyReport check_3d_consistency(const CanonicalCase& c, const FieldElement& a1, const FieldElement& a2,
                                       const FieldElement& a3, std::size_t trials, std::uint64_t seed,
                                       EdgeSignConvention convention = EdgeSignConvention::alternating,
                                       unsigned threads = 1);

}  // namespace disep
