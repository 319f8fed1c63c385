#include <gtest/gtest.h>

#include "disep/classify.hpp"
#include "disep/errors.hpp"
#include "disep/mobius.hpp"
#include "disep/separability.hpp"
#include "dsl.hpp"
#include "generators.hpp"

using namespace disep;
using disep::testing::Gen;
using disep::testing::num;
using disep::testing::var;

namespace {

std::map<VarId, MobiusMap> all_three(const MobiusMap& m) {
  return {{VarId{0}, m}, {VarId{1}, m}, {VarId{2}, m}};
}
const std::map<VarId, unsigned> kBounds{{VarId{0}, 2}, {VarId{1}, 2}, {VarId{2}, 2}};

MultiPoly family(CaseTag t, std::map<std::string, FieldElement> p = {}) {
  return canonical_family(CanonicalCase(t, std::move(p))).F;
}

}  // namespace

TEST(Mobius, GroupBasics) {
  const MobiusMap neg = MobiusMap::negation();
  EXPECT_TRUE(neg.compose(neg).equivalent(MobiusMap::identity()));
  const MobiusMap t(2, 1, 3, -1);
  EXPECT_TRUE(MobiusMap::identity().compose(t).equivalent(t));
  EXPECT_TRUE(MobiusMap(4, 2, 6, -2).equivalent(t));
  EXPECT_THROW(MobiusMap(1, 2, 2, 4), DomainError);
  EXPECT_EQ(*t.apply(FieldElement(1)), FieldElement(Rational(3, 2)));
  EXPECT_FALSE(t.apply(FieldElement(Rational(1, 3))).has_value());
}

TEST(Mobius, ActOnPolynomial) {
  const Ring r({"x"});
  const MultiPoly x = var(r, "x");
  const MobiusMap inv(0, 1, 1, 0);
  EXPECT_EQ(act_on_polynomial(x * x, {{VarId{0}, inv}}, {{VarId{0}, 2}}), num(r, 1));
  EXPECT_THROW(act_on_polynomial(x * x * x, {{VarId{0}, inv}}, {{VarId{0}, 2}}), DegreeError);
}

TEST(Mobius, ProofEquivalences) {
  const std::map<std::string, FieldElement> k2{{"k", FieldElement(2)}};
  const auto g = check_gauge_equivalence(family(CaseTag::A1, k2), family(CaseTag::A2, k2),
                                         all_three(MobiusMap::negation()), kBounds);
  EXPECT_TRUE(g.equivalent);
  const auto same = check_gauge_equivalence(family(CaseTag::A1, k2), family(CaseTag::A1, k2),
                                            all_three(MobiusMap::identity()), kBounds);
  ASSERT_TRUE(same.equivalent);
  EXPECT_TRUE(same.scalar->is_one());

  // x -> 1/(kx) lands on A2; composing with x -> -x reaches A1
  const MobiusMap inv = MobiusMap::scaled_inversion(FieldElement(2));
  EXPECT_TRUE(check_gauge_equivalence(family(CaseTag::A3, k2), family(CaseTag::A2, k2), all_three(inv), kBounds)
                  .equivalent);
  EXPECT_TRUE(check_gauge_equivalence(family(CaseTag::A3, k2), family(CaseTag::A1, k2),
                                      all_three(MobiusMap::negation().compose(inv)), kBounds)
                  .equivalent);
}

TEST(MobiusProperty, InverseComposition) {
  Gen g(disep::testing::suite_seed(401));
  for (int i = 0; i < 100; ++i) {
    const MobiusMap s = g.mobius();
    ASSERT_TRUE(s.compose(s.inverse()).equivalent(MobiusMap::identity()));
    ASSERT_TRUE(s.inverse().compose(s).equivalent(MobiusMap::identity()));
  }
}

TEST(MobiusProperty, ActionIsHomomorphismUpToScalar) {
  Gen g(disep::testing::suite_seed(402));
  const Ring r({"x1", "x2", "x3"});
  for (int i = 0; i < 50; ++i) {
    const MultiPoly f = g.poly(r, 2, 6);
    if (f.is_zero()) continue;
    const MobiusMap s = g.mobius(), t = g.mobius();
    // act(s o t) F equals act(t)(act(s) F) up to scalar
    const MultiPoly lhs = act_uniform(f, {VarId{0}, VarId{1}, VarId{2}}, s.compose(t), 2);
    const MultiPoly rhs =
        act_uniform(act_uniform(f, {VarId{0}, VarId{1}, VarId{2}}, s, 2), {VarId{0}, VarId{1}, VarId{2}}, t, 2);
    ASSERT_TRUE(proportionality(lhs, rhs).has_value()) << f;
  }
}

TEST(MobiusProperty, DifferentRootStructuresNeverEquivalent) {
  Gen g(disep::testing::suite_seed(403));
  const MultiPoly fa = family(CaseTag::A, {{"k", FieldElement(2)}});
  const MultiPoly fb = family(CaseTag::B, {{"e", FieldElement(1)}});
  for (int i = 0; i < 50; ++i) {
    ASSERT_FALSE(check_gauge_equivalence(fa, fb, all_three(g.mobius()), kBounds).equivalent);
  }
}

TEST(MobiusProperty, SeparabilityCovariance) {
  Gen g(disep::testing::suite_seed(404));
  Rng rng(404);
  const auto& tags = theorem1_tags();
  for (int i = 0; i < 50; ++i) {
    const CanonicalCase c = random_case(tags[static_cast<std::size_t>(i) % tags.size()], rng);
    if (!c.ext().is_rational()) continue;
    const FamilyPolys fp = canonical_family(c);
    const MobiusMap m = g.mobius(3);
    const MultiPoly image = act_uniform(fp.F, {VarId{0}, VarId{1}, VarId{2}}, m, 2);
    if (image.degree_in(VarId{0}) != 2 || image.degree_in(VarId{1}) != 2 || image.degree_in(VarId{2}) != 2) continue;
    const auto cert = check_strong_separability(image);
    ASSERT_EQ(cert.kind, SeparabilityKind::strong) << c.to_string() << " " << m.to_string();
    const MultiPoly expected = act_on_binary_form(fp.P, m, 4);
    ASSERT_TRUE(proportionality(*cert.P, expected).has_value()) << c.to_string() << " " << m.to_string();
  }
}

TEST(MobiusProperty, RootStructureInvariant) {
  Gen g(disep::testing::suite_seed(405));
  const Ring u({"x"});
  const MultiPoly x = var(u, "x");
  const std::vector<MultiPoly> quartics{
      (num(u, 4) * x * x - num(u, 1)) * (x * x - num(u, 1)), x * x - num(u, 1), x * x, x, num(u, 1),
      (x - num(u, 2)) * (x - num(u, 2)) * (x + num(u, 3)) * x};
  for (const auto& p : quartics) {
    const RootStructure base = root_structure(p);
    for (int i = 0; i < 50; ++i) {
      const MobiusMap m = g.mobius();
      ASSERT_EQ(root_structure(act_on_binary_form(p, m, 4)).partition, base.partition) << p << " " << m.to_string();
    }
  }
}
