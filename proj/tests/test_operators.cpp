#include <gtest/gtest.h>

#include "macdonald/operators.hpp"

namespace macdonald {
namespace {

LaurentPoly x(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }

// A handful of generic polynomials of degree up to 3 in n variables.
std::vector<LaurentPoly> samples(std::size_t n) {
  std::vector<LaurentPoly> out;
  LaurentPoly f = LaurentPoly::constant(n, 1);
  for (std::size_t i = 1; i <= n; ++i) f = f * (x(n, i) + LaurentPoly::constant(n, Scalar(static_cast<long>(i))));
  out.push_back(f);
  out.push_back(x(n, 1) * x(n, 1) * x(n, n) - x(n, 1) + LaurentPoly::constant(n, 3));
  out.push_back(x(n, n) * x(n, n) * x(n, n));
  return out;
}

class OperatorFields : public ::testing::TestWithParam<bool> {
 protected:
  FieldConfig qt() const {
    return GetParam() ? FieldConfig::symbolic(Variant::QT) : FieldConfig::default_specialized_qt();
  }
};

TEST_P(OperatorFields, HeckeQuadraticRelation) {
  const FieldConfig cfg = qt();
  for (std::size_t n : {2U, 3U}) {
    for (const LaurentPoly& f : samples(n)) {
      for (std::size_t i = 1; i < n; ++i) {
        const LaurentPoly hf = hecke(i, f, cfg);
        // (H - t)(H + 1) = 0
        const LaurentPoly lhs = hecke(i, hf, cfg) + hf - cfg.t() * hf - cfg.t() * f;
        EXPECT_TRUE(lhs.is_zero()) << f.to_string();
      }
    }
  }
}

TEST_P(OperatorFields, HeckeBraidRelation) {
  const FieldConfig cfg = qt();
  for (const LaurentPoly& f : samples(3)) {
    const LaurentPoly lhs = hecke(1, hecke(2, hecke(1, f, cfg), cfg), cfg);
    const LaurentPoly rhs = hecke(2, hecke(1, hecke(2, f, cfg), cfg), cfg);
    EXPECT_EQ(lhs, rhs);
  }
}

TEST_P(OperatorFields, CherednikOperatorsCommute) {
  const FieldConfig cfg = qt();
  for (const LaurentPoly& f : samples(2)) {
    EXPECT_EQ(xi_qt(1, xi_qt(2, f, cfg), cfg), xi_qt(2, xi_qt(1, f, cfg), cfg));
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, OperatorFields, ::testing::Values(false, true),
                         [](const auto& info) { return info.param ? "symbolic" : "specialized"; });

TEST(Operators, HeckeFixesSymmetricPolynomials) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::QT);
  const LaurentPoly e1 = x(2, 1) + x(2, 2);
  EXPECT_EQ(hecke(1, e1, cfg), cfg.t() * e1);
}

TEST(Operators, SigmaIsAnSnRepresentation) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::R);
  for (const LaurentPoly& f : samples(3)) {
    EXPECT_EQ(sigma_op(1, sigma_op(1, f, cfg), cfg), f);
    EXPECT_EQ(sigma_op(1, sigma_op(2, sigma_op(1, f, cfg), cfg), cfg),
              sigma_op(2, sigma_op(1, sigma_op(2, f, cfg), cfg), cfg));
    for (const Permutation& u : Permutation::all(3)) {
      for (const Permutation& w : Permutation::all(3)) {
        EXPECT_EQ(sigma_word(u * w, f, cfg), sigma_word(u, sigma_word(w, f, cfg), cfg));
      }
    }
  }
}

TEST(Operators, SymmetrizerProjects) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::R);
  for (const LaurentPoly& f : samples(3)) {
    const LaurentPoly s = symmetrize(f, cfg);
    EXPECT_TRUE(is_symmetric(s));
    EXPECT_EQ(symmetrize(s, cfg), s);
  }
}

TEST(Operators, JackCherednikOperatorsCommute) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::R);
  for (const LaurentPoly& f : samples(3)) {
    for (std::size_t i = 1; i <= 3; ++i) {
      for (std::size_t j = i + 1; j <= 3; ++j) {
        EXPECT_EQ(xi_r(i, xi_r(j, f, cfg), cfg), xi_r(j, xi_r(i, f, cfg), cfg));
      }
    }
  }
}

TEST(Operators, DividedDifference) {
  const LaurentPoly f = x(2, 1) * x(2, 1);
  EXPECT_EQ(divided_difference(1, f), x(2, 1) + x(2, 2));
  EXPECT_TRUE(divided_difference(1, x(2, 1) + x(2, 2)).is_zero());
}

TEST(Operators, PhiShiftsDegreeByOne) {
  const FieldConfig qt = FieldConfig::symbolic(Variant::QT);
  const FieldConfig r = FieldConfig::symbolic(Variant::R);
  for (const LaurentPoly& f : samples(2)) {
    EXPECT_EQ(phi_qt(f, qt).total_degree(), f.total_degree() + 1);
    EXPECT_EQ(phi_r(f, r).total_degree(), f.total_degree() + 1);
  }
}

}  // namespace
}  // namespace macdonald
