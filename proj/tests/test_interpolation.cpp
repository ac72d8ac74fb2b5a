#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "macdonald/errors.hpp"
#include "macdonald/interpolation.hpp"
#include "macdonald/serialize.hpp"

#ifndef MACDONALD_TEST_DATA
#define MACDONALD_TEST_DATA "tests/data"
#endif

namespace macdonald {
namespace {

LaurentPoly x(std::size_t n, std::size_t i) { return LaurentPoly::variable(n, i); }
LaurentPoly c(std::size_t n, const Scalar& s) { return LaurentPoly::constant(n, s); }

const FieldConfig& qt() {
  static const FieldConfig cfg = FieldConfig::symbolic(Variant::QT);
  return cfg;
}
const FieldConfig& jack() {
  static const FieldConfig cfg = FieldConfig::symbolic(Variant::R);
  return cfg;
}

Json load_fixture() {
  std::ifstream in(std::filesystem::path(MACDONALD_TEST_DATA) / "oracle_values.json");
  if (!in) throw std::runtime_error("missing oracle_values.json");
  return Json::parse(in);
}

FieldConfig fixture_field(const std::string& variant, bool with_a) {
  const FieldConfig base = variant == "qt" ? qt() : jack();
  return with_a ? base.with_a(std::nullopt) : base;
}

TEST(Interpolation, SmallCasesByHand) {
  const Scalar q = qt().q();
  const Scalar t = qt().t();
  EXPECT_EQ(g_recursive(Composition{0, 1}, qt()), x(2, 2) - c(2, t.inverse()));
  EXPECT_EQ(g_recursive(Composition{1, 0}, qt()),
            x(2, 1) + (t - 1) / (q * t - 1) * x(2, 2) - c(2, (q * t * t - 1) / (t * (q * t - 1))));
  EXPECT_EQ(g_recursive(Composition{1, 1}, qt()),
            x(2, 1) * x(2, 2) - t.inverse() * x(2, 1) - t.inverse() * x(2, 2) + c(2, t.pow(-2)));
  const Scalar r = jack().r();
  EXPECT_EQ(g_recursive(Composition{0, 1}, jack()), x(2, 2) + c(2, r));
  EXPECT_EQ(g_recursive(Composition{1, 0}, jack()), x(2, 1) + r / (r + 1) * x(2, 2) + c(2, r * r / (r + 1)));
  EXPECT_EQ(g_recursive(Composition{1, 1}, jack()),
            x(2, 1) * x(2, 2) + r * x(2, 1) + r * x(2, 2) + c(2, r * r));
}

TEST(Interpolation, MatchesIndependentFixture) {
  const Json fixture = load_fixture();
  std::size_t seen = 0;
  for (const auto& entry : fixture.at("G")) {
    const FieldConfig cfg = fixture_field(entry.at("variant"), false);
    const Composition alpha(entry.at("alpha").get<std::vector<int>>());
    const LaurentPoly expected = poly_from_json(entry.at("poly"));
    EXPECT_EQ(g_recursive(alpha, cfg), expected) << alpha.to_string() << " " << cfg.key();
    ++seen;
  }
  EXPECT_GT(seen, 20U);
}

TEST(Interpolation, ReciprocityMatchesFixture) {
  const Json fixture = load_fixture();
  for (const auto& entry : fixture.at("O")) {
    const FieldConfig cfg = fixture_field(entry.at("variant"), true);
    const Composition alpha(entry.at("alpha").get<std::vector<int>>());
    EXPECT_EQ(reciprocity_poly(alpha, cfg), poly_from_json(entry.at("poly"))) << alpha.to_string() << " " << cfg.key();
  }
}

TEST(Interpolation, RecursionAgreesWithDirectSolve) {
  for (const FieldConfig& cfg : {qt(), jack(), FieldConfig::default_specialized_qt()}) {
    for (const auto& alpha : enumerate_compositions(2, 2)) {
      EXPECT_EQ(g_recursive(alpha, cfg), g_oracle(alpha, cfg)) << alpha.to_string() << " " << cfg.key();
    }
  }
  const FieldConfig specialized = FieldConfig::default_specialized_qt();
  for (const auto& alpha : enumerate_compositions(3, 2)) {
    EXPECT_EQ(g_recursive(alpha, specialized), g_oracle(alpha, specialized)) << alpha.to_string();
  }
}

TEST(Interpolation, EveryDescentGivesTheSamePolynomial) {
  const FieldConfig cfg = FieldConfig::default_specialized_qt();
  for (const auto& alpha : enumerate_compositions(3, 3)) {
    const LaurentPoly g = g_recursive(alpha, cfg);
    for (std::size_t i : descents(alpha)) EXPECT_EQ(g_via_descent(alpha, i, cfg), g) << alpha.to_string();
    if (alpha[2] > 0) EXPECT_EQ(g_via_phi(alpha, cfg), g) << alpha.to_string();
  }
}

TEST(Interpolation, VanishesAndIsMonic) {
  const FieldConfig cfg = FieldConfig::default_specialized_qt();
  for (const auto& alpha : enumerate_compositions(2, 3)) {
    const LaurentPoly g = g_recursive(alpha, cfg);
    Monomial lead(alpha.entries().begin(), alpha.entries().end());
    EXPECT_EQ(g.coefficient(lead), Scalar(1));
    EXPECT_LE(g.total_degree(), alpha.degree());
    for (const auto& beta : enumerate_compositions(2, alpha.degree())) {
      const Scalar value = g.evaluate(spectral(beta.as_vector(), cfg).coords);
      if (beta == alpha) {
        EXPECT_FALSE(value.is_zero());
      } else {
        EXPECT_TRUE(value.is_zero()) << alpha.to_string() << " at " << beta.to_string();
      }
    }
  }
}

TEST(Interpolation, OneVariableClosedForm) {
  const FieldConfig one = FieldConfig::symbolic(Variant::QT);
  const LaurentPoly var = x(1, 1);
  LaurentPoly expected = c(1, 1);
  for (int k = 0; k <= 4; ++k) {
    EXPECT_EQ(g_recursive(Composition{k}, one), expected) << k;
    expected = expected * (var - c(1, one.q().pow(k)));
  }
}

TEST(Interpolation, EvaluationAtScaledTau) {
  // G_(0,1)(a tau) = t^{-1}(a - 1).
  const FieldConfig cfg = qt().with_a(std::nullopt);
  const Scalar a = cfg.a();
  const Scalar t = cfg.t();
  const LaurentPoly g = g_recursive(Composition{0, 1}, base_field(cfg));
  EXPECT_EQ(g.evaluate(scaled(a, tau(2, cfg))), t.inverse() * (a - 1));
}

TEST(Interpolation, ClosedFormsForOneBox) {
  const Scalar q = qt().q();
  const Scalar t = qt().t();
  const Composition box{0, 1};
  EXPECT_EQ(closed_d(box, qt()), 1 - q * t * t);
  EXPECT_EQ(closed_e(box, qt()), t.inverse() - q * t);
  const FieldConfig qta = qt().with_a(std::nullopt);
  EXPECT_EQ(closed_phi(box, qta, qta.a()), qta.a() - 1);
  const Scalar r = jack().r();
  EXPECT_EQ(closed_d(box, jack()), 1 + 2 * r);
  EXPECT_EQ(closed_e(box, jack()), 1 + 2 * r);
  const FieldConfig ra = jack().with_a(std::nullopt);
  EXPECT_EQ(closed_phi(box, ra, ra.a()), ra.a());
}

TEST(Interpolation, OneVariableReciprocity) {
  const FieldConfig ra = jack().with_a(std::nullopt);
  const Scalar a = ra.a();
  EXPECT_EQ(reciprocity_poly(Composition{1}, ra), c(1, 1) - a.inverse() * x(1, 1));
  const FieldConfig qta = qt().with_a(std::nullopt);
  const Scalar b = qta.a();
  EXPECT_EQ(reciprocity_poly(Composition{1}, qta), (b * x(1, 1) - c(1, 1)).divided_by(b - 1));
}

TEST(Binomials, OneVariableGaussian) {
  const Scalar q = qt().q();
  auto qint = [&](int m) {
    Scalar s = 0;
    for (int i = 0; i < m; ++i) s += q.pow(i);
    return s;
  };
  auto qfact = [&](int m) {
    Scalar s = 1;
    for (int i = 1; i <= m; ++i) s *= qint(i);
    return s;
  };
  for (int k = 0; k <= 4; ++k) {
    long choose = 1;
    for (int j = 0; j <= k; ++j) {
      EXPECT_EQ(binom(Composition{k}, Composition{j}, qt()), qfact(k) / (qfact(j) * qfact(k - j)));
      EXPECT_EQ(binom(Composition{k}, Composition{j}, jack()), Scalar(choose));
      choose = choose * (k - j) / (j + 1);
    }
  }
}

TEST(Binomials, SupportAndNormalization) {
  const FieldConfig cfg = FieldConfig::default_specialized_qt();
  for (const auto& alpha : enumerate_compositions(2, 3)) {
    EXPECT_EQ(binom(alpha, alpha, cfg), Scalar(1));
    for (const auto& beta : enumerate_compositions(2, 3)) {
      if (!contains(alpha, beta)) EXPECT_TRUE(binom(alpha, beta, cfg).is_zero()) << alpha.to_string();
    }
  }
}

TEST(Binomials, ReciprocalParametersBySubstitution) {
  const FieldConfig inverted = qt().with_inverted_parameters(true);
  for (const auto& alpha : enumerate_compositions(2, 2)) {
    for (const auto& beta : enumerate_compositions(2, 2)) {
      EXPECT_EQ(binom(alpha, beta, inverted), binom_reciprocal_by_substitution(alpha, beta, qt()));
    }
  }
}

TEST(Symmetric, InterpolationPolynomialsAreSymmetric) {
  for (const auto& lambda : enumerate_partitions(3, 3)) {
    const LaurentPoly f = r_sym(lambda, jack());
    EXPECT_TRUE(is_symmetric(f)) << lambda.to_string();
    EXPECT_EQ(f.top_part(lambda.degree()), rprime_r(lambda, jack()).top_part(lambda.degree()));
  }
  EXPECT_EQ(monomial_symmetric(Composition{1, 0}), x(2, 1) + x(2, 2));
}

TEST(Preflight, RejectsDegenerateSpecializations) {
  auto at = [](long qv, long tv) {
    return FieldConfig::specialized(Variant::QT, {{Generator::q, BigRational(qv)}, {Generator::t, BigRational(tv)}});
  };
  EXPECT_THROW(preflight(at(1, 3), 2, 2), SpecializationCollision);
  EXPECT_THROW(preflight(at(2, -1), 2, 2), SpecializationCollision);
  EXPECT_THROW(preflight(at(0, 3), 2, 2), SpecializationCollision);
  EXPECT_NO_THROW(preflight(at(2, 3), 3, 4));
  try {
    preflight(at(1, 3), 2, 2);
  } catch (const SpecializationCollision& e) {
    EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos) << e.what();
  }
  // a = 1 is a root of phi for the single box.
  const FieldConfig with_bad_a = at(2, 3).with_a(BigRational(1));
  EXPECT_THROW(preflight_a(with_bad_a, 2, 2), SpecializationCollision);
}

TEST(Sampler, IsDeterministic) {
  ParameterSampler first(42);
  ParameterSampler second(42);
  ParameterSampler other(43);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    const BigRational v = first.next();
    EXPECT_EQ(v, second.next());
    differs = differs || v != other.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Cache, PersistsAcrossMemoryClears) {
  const auto dir = std::filesystem::temp_directory_path() / "macdonald_cache_test";
  std::filesystem::remove_all(dir);
  PolyCache& cache = PolyCache::global();
  cache.clear_memory();
  cache.set_directory(dir);
  const FamilyKey key{Family::G, Composition{2, 1}, FieldConfig::default_specialized_qt()};
  int computed = 0;
  const LaurentPoly first = cache.get_or_compute(key, [&] {
    ++computed;
    return g_oracle(key.index, key.cfg);
  });
  EXPECT_TRUE(std::filesystem::exists(dir / PolyCache::file_name(key)));
  cache.clear_memory();
  const LaurentPoly second = cache.get_or_compute(key, [&] {
    ++computed;
    return LaurentPoly(2);
  });
  EXPECT_EQ(computed, 1);
  EXPECT_EQ(first, second);
  // Distinct fields never share an entry.
  const FamilyKey other{Family::G, Composition{2, 1}, FieldConfig::default_specialized_qt().with_inverted_parameters(true)};
  EXPECT_NE(PolyCache::file_name(key), PolyCache::file_name(other));
  cache.set_directory(std::nullopt);
  cache.clear_memory();
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace macdonald
