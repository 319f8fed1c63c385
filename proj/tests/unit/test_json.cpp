#include <gtest/gtest.h>

#include "disep/errors.hpp"
#include "disep/json_io.hpp"
#include "generators.hpp"

using namespace disep;
using disep::testing::Gen;
namespace jio = disep::json;

TEST(Json, Rationals) {
  EXPECT_EQ(jio::encode(Rational(-3, 4)), "-3/4");
  EXPECT_EQ(jio::decode_rational(nlohmann::json(5)), Rational(5));
  EXPECT_THROW(jio::decode_rational(nlohmann::json(1.5)), ParseError);
  EXPECT_THROW(jio::decode_rational(nlohmann::json("x")), ParseError);
}

TEST(Json, FieldElements) {
  const FieldElement x(std::vector<Rational>{1, Rational(1, 2)}, ExtensionDescriptor{2});
  EXPECT_EQ(jio::decode_field_element(jio::encode(x)), x);
  EXPECT_EQ(jio::decode_field_element(nlohmann::json("3/7"), ExtensionDescriptor{5}),
            FieldElement(Rational(3, 7), ExtensionDescriptor{5}));
  EXPECT_THROW(jio::decode_field_element(jio::encode(x), ExtensionDescriptor{3}), ParseError);
  EXPECT_THROW(jio::decode_ext(nlohmann::json::array({4})), ParseError);
}

TEST(Json, PolyFormat) {
  const Ring r({"x1", "x2"});
  MultiPoly p(r);
  p.add_term({2, 0}, FieldElement(1));
  p.add_term({0, 0}, FieldElement(Rational(-1, 2)));
  const nlohmann::json j = jio::encode(p);
  EXPECT_EQ(j.at("vars"), nlohmann::json::array({"x1", "x2"}));
  EXPECT_EQ(j.at("terms").at(0).at("exps"), nlohmann::json::array({2, 0}));
  EXPECT_EQ(jio::decode_poly(j), p);
  EXPECT_THROW(jio::decode_poly(nlohmann::json::object({{"vars", {"x"}}})), ParseError);
  EXPECT_THROW(jio::decode_poly(nlohmann::json::parse(R"({"vars":["x"],"terms":[{"coeff":"1","exps":[1,2]}]})")),
               ParseError);
}

TEST(JsonProperty, PolyRoundTrip) {
  Gen g(disep::testing::suite_seed(901));
  const std::vector<Ring> rings{Ring({"x1", "x2", "x3"}), Ring({"s", "x"}, ExtensionDescriptor{-2, 3})};
  for (int i = 0; i < 200; ++i) {
    const Ring& r = rings[static_cast<std::size_t>(i % 2)];
    const MultiPoly p = g.poly(r, 3, 6);
    const MultiPoly back = jio::decode_poly(nlohmann::json::parse(jio::encode(p).dump()));
    ASSERT_EQ(back.ring().names(), r.names());
    ASSERT_EQ(back.ring().ext(), r.ext());
    ASSERT_EQ(change_ring(back, r), p);
  }
}

TEST(JsonProperty, OtherRoundTrips) {
  Gen g(disep::testing::suite_seed(902));
  Rng rng(902);
  for (int i = 0; i < 50; ++i) {
    const MobiusMap m = g.mobius();
    ASSERT_TRUE(jio::decode_mobius(jio::encode(m)).equivalent(m));
    const CaseTag t = theorem1_tags()[static_cast<std::size_t>(i) % theorem1_tags().size()];
    const CanonicalCase c = random_case(t, rng);
    ASSERT_EQ(jio::decode_case(jio::encode(c)).to_string(), c.to_string());
  }
  Report r;
  r.add("a", true, "detail", {"w1"});
  r.add("b", false);
  r.printed_diffs.push_back(PrintedDiff{"J", "p", "c", "c - p", false});
  const Report back = jio::decode_report(jio::encode(r));
  EXPECT_EQ(jio::encode(back), jio::encode(r));
  EXPECT_FALSE(back.passed());
}
