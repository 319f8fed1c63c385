#include <gtest/gtest.h>

#include "disep/classify.hpp"
#include "disep/errors.hpp"
#include "disep/linalg.hpp"
#include "disep/pencil.hpp"
#include "disep/separability.hpp"
#include "dsl.hpp"
#include "generators.hpp"

using namespace disep;
using disep::testing::Gen;
using disep::testing::num;
using disep::testing::var;

namespace {

struct Vars {
  Ring r = trivariate_ring();
  MultiPoly x1 = var(r, "x1"), x2 = var(r, "x2"), x3 = var(r, "x3");
};


}  // namespace

TEST(Rank1, Examples) {
  const Ring r({"x", "y"});
  const MultiPoly x = var(r, "x"), y = var(r, "y");
  const auto f = rank1_bivariate_factorization(x * x * y * y + x * x + y * y + num(r, 1), VarId{0}, VarId{1});
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(f->p, x * x + num(r, 1));
  EXPECT_EQ(f->q, y * y + num(r, 1));
  EXPECT_FALSE(rank1_bivariate_factorization(x * y + num(r, 1), VarId{0}, VarId{1}).has_value());
  EXPECT_FALSE(rank1_bivariate_factorization(MultiPoly(r), VarId{0}, VarId{1}).has_value());
}

TEST(Rank1Property, FactorablePairsRecovered) {
  Gen g(disep::testing::suite_seed(501));
  const Ring r({"u", "v"});
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = g.univariate(r, VarId{0}, static_cast<unsigned>(g.range(0, 4)));
    const MultiPoly q = g.univariate(r, VarId{1}, static_cast<unsigned>(g.range(0, 4)));
    const auto f = rank1_bivariate_factorization(p * q, VarId{0}, VarId{1});
    ASSERT_TRUE(f.has_value()) << p << " | " << q;
    ASSERT_EQ(f->p * f->q, p * q);
    ASSERT_TRUE(f->p.leading_coefficient().is_one());
    ASSERT_TRUE(proportionality(f->p, p).has_value());
    ASSERT_TRUE(proportionality(f->q, q).has_value());
  }
}

TEST(Rank1Property, RankTwoGridsRejected) {
  Gen g(disep::testing::suite_seed(502));
  const Ring r({"u", "v"});
  int tested = 0;
  while (tested < 200) {
    const MultiPoly p1 = g.univariate(r, VarId{0}, 2), q1 = g.univariate(r, VarId{1}, 2);
    const MultiPoly p2 = g.univariate(r, VarId{0}, 2), q2 = g.univariate(r, VarId{1}, 2);
    const MultiPoly d = p1 * q1 + p2 * q2;
    ExactMatrix grid(3, 3);
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned b = 0; b < 3; ++b) grid.set(a, b, d.coefficient({a, b}));
    if (rank(grid) != 2) continue;
    ++tested;
    ASSERT_FALSE(rank1_bivariate_factorization(d, VarId{0}, VarId{1}).has_value()) << d;
  }
}

TEST(Separability, CaseD) {
  const FamilyPolys fp = canonical_family(CanonicalCase(CaseTag::D));
  const Vars v;
  EXPECT_EQ(fp.F, (v.x1 * v.x2 + v.x2 * v.x3 + v.x1 * v.x3).scaled(Rational(-1, 2)) +
                      (v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3).scaled(Rational(1, 4)));
  EXPECT_EQ(discriminant_in_variable(fp.F, VarId{2}), v.x1 * v.x2);
  const auto cert = check_strong_separability(fp.F);
  EXPECT_EQ(cert.kind, SeparabilityKind::strong);
  EXPECT_EQ(cert.P->to_string(), "x");
  EXPECT_TRUE(cert.remultiplication_exact());
}

TEST(Separability, X1X2X3) {
  const Vars v;
  const MultiPoly f = v.x1 * v.x2 * v.x3;
  EXPECT_THROW(check_strong_separability(f), DegenerateInput);
  const auto cert = check_strong_separability(f, DegreePolicy::formal);
  EXPECT_EQ(cert.kind, SeparabilityKind::strong);
  EXPECT_EQ(cert.P->to_string(), "x^2");
  EXPECT_EQ(formal_discriminant(f, VarId{2}), v.x1 * v.x1 * v.x2 * v.x2);

  const CanonicalCase c1(CaseTag::C1, {{"lambda", FieldElement(0)}, {"mu", FieldElement(1)}, {"nu", FieldElement(0)}});
  EXPECT_EQ(canonical_family(c1).F, f);
}

TEST(Separability, DegenerateInputs) {
  const Vars v;
  EXPECT_THROW(check_strong_separability(v.x1 + v.x2 + v.x3), DegenerateInput);
  EXPECT_THROW(check_strong_separability(v.x1 * v.x2 + v.x3), DegenerateInput);
}

TEST(Separability, Kinds) {
  const Vars v;
  auto quad = [&](const MultiPoly& x, long c) { return x * x + num(v.r, c); };
  const std::array<VarId, 3> xs{VarId{0}, VarId{1}, VarId{2}};
  const MultiPoly fa = canonical_family(CanonicalCase(CaseTag::A, {{"k", FieldElement(2)}})).F;
  EXPECT_EQ(classify_separability_kind(fa, xs), SeparabilityKind::strong);

  const MultiPoly sym = quad(v.x1, 1) * quad(v.x2, 2) * quad(v.x3, 2);
  const auto cs = analyze_separability(sym, xs);
  EXPECT_EQ(cs.kind, SeparabilityKind::symmetric);
  EXPECT_EQ(cs.distinguished, 0u);
  EXPECT_EQ(classify_separability_kind(quad(v.x1, 1) * quad(v.x2, 2) * quad(v.x3, 3), xs), SeparabilityKind::weak);
  EXPECT_EQ(classify_separability_kind(v.x1 * v.x1 + v.x2 * v.x2 + v.x3 * v.x3 + v.x1 * v.x2 * v.x3, xs),
            SeparabilityKind::none);
}

TEST(Separability, Kowalevski) {
  const KowalevskiModel m = build_kowalevski(1, 0, 1, 0);
  EXPECT_TRUE(m.report.passed());
  const Ring u({"x"});
  const MultiPoly x = var(u, "x");
  EXPECT_EQ(m.P, num(u, -1) * x * x * x * x + num(u, 6) * x * x + num(u, 1));
  const auto cert = analyze_separability(m.Q, {m.ring.var("s"), m.ring.var("x1"), m.ring.var("x2")},
                                         DegreePolicy::formal);
  EXPECT_EQ(cert.kind, SeparabilityKind::symmetric);
  EXPECT_EQ(cert.distinguished, 0u);

  const KowalevskiModel deg = build_kowalevski(0, 0, 1, 1);
  EXPECT_TRUE(deg.report.passed());
  EXPECT_EQ(deg.P, num(u, -1) * x * x * x * x);
}

TEST(System, Counts) {
  const auto sys = generate_separability_system({FieldElement(0), FieldElement(0), FieldElement(1), FieldElement(0),
                                                 FieldElement(-1)});
  EXPECT_EQ(sys.equations.size(), 75u);
  EXPECT_EQ(sys.labels.size(), 75u);
  EXPECT_EQ(sys.unknowns.arity(), 27u);
  for (const auto& e : sys.equations) EXPECT_LE(e.total_degree(), 2u);

  const FamilyPolys b = canonical_family(CanonicalCase(CaseTag::B, {{"e", FieldElement(1)}}));
  for (const auto& r : system_residuals(sys, coefficient_vector(b.F))) EXPECT_TRUE(r.is_zero());

  const auto zero = system_residuals(sys, std::vector<FieldElement>(27, FieldElement(0)));
  EXPECT_TRUE(std::any_of(zero.begin(), zero.end(), [](const FieldElement& r) { return !r.is_zero(); }));

  const auto symbolic = generate_separability_system_symbolic();
  EXPECT_EQ(symbolic.equations.size(), 75u);
  EXPECT_EQ(symbolic.unknowns.arity(), 32u);
}

TEST(SeparabilityProperty, RemultiplicationOnFamilies) {
  Rng rng(disep::testing::suite_seed(503));
  for (CaseTag t : theorem1_tags()) {
    for (int i = 0; i < 5; ++i) {
      const CanonicalCase c = random_case(t, rng);
      const FamilyPolys fp = canonical_family(c);
      const auto cert = check_strong_separability(fp.F);
      ASSERT_EQ(cert.kind, SeparabilityKind::strong) << c.to_string();
      ASSERT_TRUE(cert.remultiplication_exact()) << c.to_string();
      const MultiPoly canon = change_ring(fp.P, cert.P->ring());
      ASSERT_TRUE(proportionality(*cert.P, canon).has_value()) << c.to_string();
    }
  }
}

TEST(SeparabilityProperty, SymbolicPencilDs) {
  const PencilModel m = tangential_pencil_equation(TangentialConic::symbolic());
  const MultiPoly ds = discriminant_in_variable(m.F, m.s());
  const auto f = rank1_bivariate_factorization(ds, m.x1(), m.x2());
  ASSERT_TRUE(f.has_value());
  const PrintedGeneral pr = printed_general_forms(m);
  EXPECT_TRUE(proportionality(f->p, pr.P_x1).has_value());
}
