#include <gtest/gtest.h>

#include "disep/errors.hpp"
#include "disep/numfield.hpp"
#include "generators.hpp"

using namespace disep;
using disep::testing::Gen;

namespace {

FieldElement in2(long a, long b) { return FieldElement(std::vector<Rational>{Rational(a), Rational(b)}, ExtensionDescriptor{2}); }

std::vector<ExtensionDescriptor> descriptors() {
  return {ExtensionDescriptor{}, ExtensionDescriptor{2}, ExtensionDescriptor{-3}, ExtensionDescriptor{2, 3},
          ExtensionDescriptor{-1, 5}};
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("-6/8"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("7").to_string(), "7");
  EXPECT_EQ(Rational(3, -9).to_string(), "-1/3");
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
}

TEST(Rational, SqrtExact) {
  EXPECT_EQ(rational_sqrt_exact(Rational(9, 16)), Rational(3, 4));
  EXPECT_FALSE(rational_sqrt_exact(Rational(2)).has_value());
  EXPECT_EQ(rational_sqrt_exact(Rational(25, 16) - 1), Rational(3, 4));
  EXPECT_EQ(rational_sqrt_exact(Rational(0)), Rational(0));
  EXPECT_THROW(rational_sqrt_exact(Rational(-4)), DomainError);
}

TEST(Rational, SquarefreeDecompose) {
  const auto [d, m] = squarefree_decompose(Rational(50, 9));
  EXPECT_EQ(d, 2);
  EXPECT_EQ(m, Rational(5, 3));
  EXPECT_EQ(squarefree_part(Integer(-12)), -3);
}

TEST(Extension, Descriptors) {
  EXPECT_EQ(ExtensionDescriptor{}.degree(), 1u);
  EXPECT_EQ((ExtensionDescriptor{2, 3}).degree(), 4u);
  EXPECT_THROW(ExtensionDescriptor{4}, DomainError);
  EXPECT_THROW((ExtensionDescriptor{2, 8}), DomainError);
  EXPECT_EQ(ExtensionDescriptor::join(ExtensionDescriptor{2}, ExtensionDescriptor{3}), (ExtensionDescriptor{2, 3}));
  EXPECT_THROW(ExtensionDescriptor::join(ExtensionDescriptor{2, 3}, ExtensionDescriptor{5}), DomainError);
}

TEST(Extension, Examples) {
  const FieldElement a = in2(1, 1);
  EXPECT_EQ(a * a, in2(3, 2));
  EXPECT_EQ(a.inverse(), in2(-1, 1));
  EXPECT_EQ(FieldElement(Rational(3, 4)).inverse(), FieldElement(Rational(4, 3)));

  const ExtensionDescriptor e23{2, 3};
  const FieldElement r2 = FieldElement(std::vector<Rational>{1, 1, 0, 0}, e23);
  const FieldElement r3 = FieldElement(std::vector<Rational>{1, 0, 1, 0}, e23);
  EXPECT_EQ(r2 * r3, FieldElement(std::vector<Rational>{1, 1, 1, 1}, e23));
  EXPECT_EQ((r2 * r3).to_string(), "1+sqrt(2)+sqrt(3)+sqrt(6)");
}

TEST(Extension, Errors) {
  EXPECT_THROW(FieldElement::zero(ExtensionDescriptor{2}).inverse(), DivisionByZero);
  EXPECT_THROW((void)(in2(1, 1) + FieldElement(std::vector<Rational>{1, 1}, ExtensionDescriptor{3})), DescriptorMismatch);
  EXPECT_THROW((void)in2(1, 1).to_rational(), DomainError);
}

TEST(Extension, LiftAndSqrt) {
  const auto s = FieldElement::sqrt_of_rational(Rational(8, 9), ExtensionDescriptor{2});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s * *s, FieldElement(Rational(8, 9), ExtensionDescriptor{2}));
  const auto s6 = FieldElement::sqrt_of_rational(Rational(6), ExtensionDescriptor{2, 3});
  ASSERT_TRUE(s6.has_value());
  EXPECT_EQ(*s6 * *s6, FieldElement(Rational(6), ExtensionDescriptor{2, 3}));
  EXPECT_FALSE(FieldElement::sqrt_of_rational(Rational(5), ExtensionDescriptor{2}).has_value());
  const FieldElement lifted = FieldElement::lift(in2(1, 1), ExtensionDescriptor{2, 3});
  EXPECT_EQ(lifted, FieldElement(std::vector<Rational>{1, 1, 0, 0}, ExtensionDescriptor{2, 3}));
}

TEST(ExtensionProperty, FieldAxioms) {
  Gen g(disep::testing::suite_seed(101));
  for (const auto& ext : descriptors()) {
    for (int i = 0; i < 1000; ++i) {
      const FieldElement a = g.element(ext), b = g.element(ext), c = g.element(ext);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + FieldElement::zero(ext), a);
      ASSERT_EQ(a * FieldElement::one(ext), a);
      ASSERT_TRUE((a - a).is_zero());
    }
  }
}

TEST(ExtensionProperty, InverseIsTwoSided) {
  Gen g(disep::testing::suite_seed(102));
  for (const auto& ext : descriptors()) {
    for (int i = 0; i < 100; ++i) {
      const FieldElement x = g.nonzero_element(ext);
      ASSERT_TRUE((x * x.inverse()).is_one()) << x;
      ASSERT_TRUE((x.inverse() * x).is_one()) << x;
    }
  }
}

TEST(ExtensionProperty, ConjugationIsMultiplicative) {
  Gen g(disep::testing::suite_seed(103));
  const ExtensionDescriptor ext{2, 3};
  for (int i = 0; i < 200; ++i) {
    const FieldElement a = g.element(ext), b = g.element(ext);
    for (unsigned m = 0; m < 4; ++m) ASSERT_EQ((a * b).conjugate(m), a.conjugate(m) * b.conjugate(m));
  }
}
