#include "godeaux/pdo_properties.hpp"
#include "godeaux/pdo_text.hpp"

#include <gtest/gtest.h>

using namespace godeaux;
using namespace godeaux::pdo;

TEST(Parse, TermsAndCoefficients) {
  const auto p = parse_operator("3/2 x1^2 x2 d1 d2^3 - d1 + 4");
  EXPECT_EQ(p.coefficient({2, 1, 1, 3}), Rational(3, 2));
  EXPECT_EQ(p.coefficient({0, 0, 1, 0}), -1);
  EXPECT_EQ(p.coefficient({0, 0, 0, 0}), 4);
  EXPECT_EQ(p.size(), 3u);
}

TEST(Parse, RepeatedFactorsStarsAndCancellation) {
  EXPECT_EQ(parse_operator("2*x1*x1 d2"), parse_operator("2 x1^2 d2"));
  EXPECT_TRUE(parse_operator("x1 - x1").is_zero());
  EXPECT_EQ(parse_operator("-x1 + 2 x1"), parse_operator("x1"));
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse_operator(""), ParseError);
  EXPECT_THROW(parse_operator("x3"), ParseError);
  EXPECT_THROW(parse_operator("x1 x2 +"), ParseError);
  EXPECT_THROW(parse_operator("1/0"), ParseError);
  EXPECT_THROW(parse_operator("x1 y"), ParseError);
  EXPECT_THROW(parse_operator("d1^"), ParseError);
  EXPECT_THROW(parse_operator("d1^7", 12, 6), std::invalid_argument);
}

TEST(Print, CanonicalLexicographicOrder) {
  EXPECT_EQ(to_string(parse_operator("d2 + x1 + d1 + x2 + 1")), "1 + d2 + d1 + x2 + x1");
  EXPECT_EQ(to_string(parse_operator("-x1 d1 - 1/3")), "-1/3 - x1 d1");
  EXPECT_EQ(to_string(TruncatedOperator(12, 6)), "0");
}

TEST(RoundTrip, RandomOperators) {
  for (std::uint32_t t = 0; t < 300; ++t) {
    TrialRng rng(99, 0, t);
    const auto p = random_operator(rng, 12, 6, {6, 5, 6});
    const auto text = to_string(p);
    EXPECT_EQ(parse_operator(text, 12, 6), p) << text;
    EXPECT_EQ(to_string(parse_operator(text, 12, 6)), text);
  }
}
