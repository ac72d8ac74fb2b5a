#include <gtest/gtest.h>

#include <set>

#include "macdonald/errors.hpp"
#include "macdonald/identities.hpp"
#include "macdonald/interpolation.hpp"
#include "macdonald/operators.hpp"

namespace macdonald {
namespace {

TEST(Catalog, IdsAreUniqueAndFilterable) {
  std::set<std::string> ids;
  for (const auto& entry : catalog()) {
    EXPECT_TRUE(ids.insert(entry.id).second) << entry.id;
    EXPECT_FALSE(entry.statement.empty());
    EXPECT_TRUE(is_check_id(entry.id));
  }
  EXPECT_EQ(ids.size(), 35U);
  EXPECT_FALSE(is_check_id("no-such-check"));
  for (const auto& entry : filter_catalog("binom")) EXPECT_NE(entry.id.find("binom"), std::string::npos);
}

TEST(Checks, AllPassAtSmallScale) {
  CheckOptions options;
  options.n = 2;
  options.degree = 2;
  std::vector<std::string> ids;
  for (const auto& entry : catalog()) ids.push_back(entry.id);
  const auto reports = run_checks(ids, options, 4);
  ASSERT_EQ(reports.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(reports[i].id, ids[i]);
    EXPECT_TRUE(reports[i].passed()) << ids[i] << ": " << report_to_json(reports[i], false).dump();
  }
}

TEST(Checks, OneVariableInstances) {
  CheckOptions options;
  options.n = 1;
  options.degree = 3;
  for (const char* id : {"eval-qt", "eval-r", "oko-qt", "oko-r", "binom-qt", "binom-r"}) {
    const CheckReport report = run_check(id, options);
    EXPECT_TRUE(report.passed()) << id;
    EXPECT_GT(report.instances, 0U) << id;
  }
}

TEST(Checks, UnknownIdIsAUsageError) {
  EXPECT_THROW((void)run_check("no-such-check", CheckOptions{}), UsageError);
}

TEST(Checks, BadSpecializationIsReportedNotAnswered) {
  CheckOptions options;
  options.values[Generator::q] = BigRational(1);
  EXPECT_THROW((void)run_check("eval-qt", options), SpecializationCollision);
}

TEST(Checks, ReportsAreReproducible) {
  CheckOptions options;
  options.n = 2;
  options.degree = 2;
  options.seed = 9;
  const auto first = report_to_json(run_check("binom-qt", options), false).dump();
  const auto second = report_to_json(run_check("binom-qt", options), false).dump();
  EXPECT_EQ(first, second);
  EXPECT_EQ(report_to_json(run_check("binom-qt", options), false).contains("elapsed_ms"), false);
  EXPECT_TRUE(report_to_json(run_check("binom-qt", options), true).contains("elapsed_ms"));
}

TEST(Checks, SymbolicModeRecordsCertification) {
  CheckOptions options;
  options.n = 2;
  options.degree = 2;
  options.symbolic = true;
  const CheckReport report = run_check("eval-qt", options);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.certification, "symbolic");
}

// The comparisons used by the checks must notice a wrong answer.
TEST(Mutation, WrongEigenvalueIsDetected) {
  const FieldConfig cfg = FieldConfig::default_specialized_qt();
  const Composition alpha{2, 0};
  const LaurentPoly g = g_recursive(alpha, cfg);
  const auto point = spectral(alpha.as_vector(), cfg);
  const LaurentPoly image = xi_qt(1, g, cfg);
  EXPECT_EQ(image, point[0].inverse() * g);
  EXPECT_NE(image, point[1].inverse() * g);
}

TEST(Mutation, PerturbedPolynomialFailsVanishing) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::R);
  const Composition alpha{1, 1};
  LaurentPoly g = g_recursive(alpha, cfg);
  g.add_term({0, 0}, Scalar::rational(1, 1000));
  bool vanishes_everywhere = true;
  for (const auto& beta : enumerate_compositions(2, 1)) {
    vanishes_everywhere = vanishes_everywhere && g.evaluate(spectral(beta.as_vector(), cfg).coords).is_zero();
  }
  EXPECT_FALSE(vanishes_everywhere);
}

TEST(Mutation, WrongBinomialIsDetected) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::R);
  EXPECT_NE(binom(Composition{3}, Composition{1}, cfg), Scalar(4));
}

}  // namespace
}  // namespace macdonald
