#include <gtest/gtest.h>

#include "macdonald/errors.hpp"
#include "macdonald/polyring.hpp"
#include "macdonald/serialize.hpp"

namespace macdonald {
namespace {

LaurentPoly x(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }
LaurentPoly c(std::size_t n, const Scalar& s) { return LaurentPoly::constant(n, s); }

TEST(LaurentPoly, ArithmeticAndDegree) {
  const LaurentPoly f = x(2, 1) * x(2, 1) + c(2, 3) * x(2, 2) - c(2, 1);
  EXPECT_EQ(f.total_degree(), 2);
  EXPECT_EQ(f.coefficient({0, 1}), Scalar(3));
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((x(2, 1) + x(2, 2)) * (x(2, 1) - x(2, 2)), x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2));
  EXPECT_THROW((void)(x(2, 1) + x(3, 1)), DimensionError);
}

TEST(LaurentPoly, NegativeExponents) {
  const LaurentPoly f = LaurentPoly::monomial({-1, 2}, Scalar(1));
  EXPECT_FALSE(f.is_polynomial());
  EXPECT_EQ(f.times_monomial({1, 0}), x(2, 2) * x(2, 2));
  const std::vector<Scalar> zero_first{0, 1};
  EXPECT_THROW((void)f.evaluate(zero_first), DivisionByZero);
}

TEST(LaurentPoly, Evaluate) {
  const LaurentPoly f = x(2, 1) * x(2, 2) - c(2, 2) * x(2, 2);
  const std::vector<Scalar> point{3, Scalar::rational(1, 2)};
  EXPECT_EQ(f.evaluate(point), Scalar::rational(1, 2));
}

TEST(LaurentPoly, PermuteVariables) {
  const LaurentPoly f = x(3, 1) * x(3, 1) * x(3, 2) + x(3, 3);
  for (const Permutation& u : Permutation::all(3)) {
    for (const Permutation& w : Permutation::all(3)) {
      EXPECT_EQ(f.permute_vars(u * w), f.permute_vars(w).permute_vars(u));
    }
  }
  EXPECT_EQ(f.swap_adjacent(1), x(3, 2) * x(3, 2) * x(3, 1) + x(3, 3));
}

TEST(LaurentPoly, AffineSubstitution) {
  const LaurentPoly f = x(2, 1) * x(2, 2);
  std::vector<AffineImage> images = identity_images(2);
  images[0].offset = 1;
  images[1].scale = 2;
  EXPECT_EQ(f.affine_substitute(images), c(2, 2) * (x(2, 1) + c(2, 1)) * x(2, 2));
  EXPECT_EQ(scale_vars(f, 3), c(2, 9) * f);
  EXPECT_EQ(translate_vars(x(2, 1), -1), x(2, 1) - c(2, 1));
  const LaurentPoly inv = LaurentPoly::monomial({-1, 0}, Scalar(1));
  EXPECT_THROW((void)inv.affine_substitute(images), UnsupportedSubstitution);
}

TEST(LaurentPoly, TopPartAndDifferenceQuotient) {
  const LaurentPoly f = x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2) + x(2, 1);
  EXPECT_EQ(f.top_part(2), x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2));
  EXPECT_TRUE(f.top_part(3).is_zero());
  EXPECT_THROW((void)f.top_part(1), DegreeError);
  const LaurentPoly g = x(2, 1) * x(2, 1) - x(2, 2) * x(2, 2);
  EXPECT_EQ(g.divide_by_difference(1), x(2, 1) + x(2, 2));
  EXPECT_THROW((void)f.divide_by_difference(1), InvariantViolation);
}

TEST(LaurentPoly, Symmetry) {
  EXPECT_TRUE(is_symmetric(x(3, 1) + x(3, 2) + x(3, 3)));
  EXPECT_FALSE(is_symmetric(x(3, 1)));
}

TEST(LaurentPoly, PrintsInDescendingOrder) {
  const LaurentPoly f = x(2, 2) + x(2, 1) * x(2, 1) - c(2, 1);
  EXPECT_EQ(f.to_string(), "x1^2 + x2 - 1");
}

TEST(Serialize, ScalarRoundTrip) {
  const Scalar q = Scalar::generator(Generator::q);
  const Scalar a = Scalar::generator(Generator::a);
  for (const Scalar& s : {Scalar(0), Scalar::rational(-7, 3), (q * q - a) / (q * a + 2), q.inverse()}) {
    EXPECT_EQ(scalar_from_json(scalar_to_json(s)), s) << s.to_string();
  }
  EXPECT_EQ(scalar_to_json(Scalar::rational(-7, 3)), Json("-7/3"));
}

TEST(Serialize, PolyRoundTripIsStable) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::QT);
  const LaurentPoly f = x(2, 1) * cfg.q() - c(2, cfg.t().inverse()) + LaurentPoly::monomial({-1, 3}, Scalar(2));
  const Json j = poly_to_json(f);
  EXPECT_EQ(poly_from_json(j), f);
  EXPECT_EQ(poly_to_json(poly_from_json(j)).dump(), j.dump());
  EXPECT_EQ(j["n"], 2);
}

TEST(Serialize, RejectsMalformedInput) {
  EXPECT_THROW((void)scalar_from_json(Json("1/0")), Error);
  EXPECT_THROW((void)poly_from_json(Json::parse(R"({"n": 2, "terms": [{"exp": [1], "coeff": "1"}]})")), Error);
}

}  // namespace
}  // namespace macdonald
