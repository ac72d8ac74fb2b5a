#include <gtest/gtest.h>

#include <set>

#include "macdonald/errors.hpp"
#include "macdonald/shapes.hpp"

namespace macdonald {
namespace {

TEST(Permutation, ActionMovesEntryToImagePosition) {
  const Permutation w({2, 3, 1});
  // Entry in position i moves to position w(i).
  EXPECT_EQ(w.act(IntVector{10, 20, 30}), (IntVector{30, 10, 20}));
}

TEST(Permutation, GroupActionAxioms) {
  const IntVector v{4, -1, 7, 2};
  for (const Permutation& u : Permutation::all(4)) {
    EXPECT_EQ(u.act(u.inverse().act(v)), v);
    for (const Permutation& w : Permutation::all(4)) {
      EXPECT_EQ((u * w).act(v), u.act(w.act(v)));
    }
  }
}

TEST(Permutation, ReducedWords) {
  for (const Permutation& w : Permutation::all(4)) {
    const auto word = w.reduced_word();
    EXPECT_EQ(word.size(), w.length());
    EXPECT_EQ(Permutation::from_word(4, word), w);
  }
  EXPECT_EQ(Permutation::longest(3).length(), 3U);
  EXPECT_TRUE(Permutation::identity(3).is_identity());
}

TEST(Permutation, RejectsNonPermutations) {
  EXPECT_THROW(Permutation({1, 1, 2}), Error);
  EXPECT_THROW(Permutation({0, 1}), Error);
}

TEST(Compositions, EnumerationCounts) {
  // C(n + d, n) compositions of degree at most d.
  EXPECT_EQ(enumerate_compositions(1, 4).size(), 5U);
  EXPECT_EQ(enumerate_compositions(2, 4).size(), 15U);
  EXPECT_EQ(enumerate_compositions(3, 3).size(), 20U);
  EXPECT_EQ(compositions_of_degree(3, 2).size(), 6U);
  EXPECT_EQ(enumerate_partitions(3, 3).size(), 7U);
  for (const auto& lambda : enumerate_partitions(3, 4)) EXPECT_TRUE(lambda.is_partition());
  const auto all = enumerate_compositions(3, 3);
  EXPECT_EQ(std::set<Composition>(all.begin(), all.end()).size(), all.size());
}

TEST(Compositions, Rearrangements) {
  EXPECT_EQ(rearrangements(Composition{1, 0, 1}).size(), 3U);
  EXPECT_EQ(dominant_rearrangement(Composition{0, 2, 1}), (Composition{2, 1, 0}));
  EXPECT_THROW(Composition({1, -1}), Error);
}

TEST(Compositions, DominantSortIsStable) {
  const auto sorted = dominant_sort(IntVector{1, 3, 1, 0});
  EXPECT_EQ(sorted.dominant, (IntVector{3, 1, 1, 0}));
  EXPECT_EQ(sorted.shortest.inverse().act(IntVector{1, 3, 1, 0}), sorted.dominant);
  EXPECT_EQ(sorted.shortest.one_line(), (std::vector<int>{2, 1, 3, 4}));
}

TEST(Compositions, SpectralRank) {
  EXPECT_EQ(spectral_rank(IntVector{0, 1}), (std::vector<int>{1, 0}));
  EXPECT_EQ(spectral_rank(IntVector{1, 0}), (std::vector<int>{0, 1}));
  EXPECT_EQ(spectral_rank(IntVector{2, 2, 0}), (std::vector<int>{0, 1, 2}));
}

TEST(Compositions, ShiftSharp) {
  EXPECT_EQ(shift_sharp(Composition{1, 0, 2}), (Composition{1, 1, 0}));
  EXPECT_EQ(shift_sharp(IntVector{1, 0, 0}), (IntVector{-1, 1, 0}));
}

TEST(Diagram, CellStatistics) {
  // Two rows of lengths 2 and 1.
  const auto stats = diagram_stats(Composition{2, 1});
  ASSERT_EQ(stats.size(), 3U);
  EXPECT_EQ(stats[0].arm, 1);
  EXPECT_EQ(stats[0].coarm, 0);
  EXPECT_EQ(stats[1].arm, 0);
  EXPECT_EQ(stats[1].coarm, 1);
  EXPECT_EQ(stats[2].coarm, 0);
  EXPECT_EQ(stats[0].coleg, 0);
  EXPECT_EQ(stats[2].coleg, 1);
}

TEST(Diagram, Containment) {
  EXPECT_TRUE(contains(Composition{2, 1}, Composition{1, 1}));
  EXPECT_TRUE(contains(Composition{2, 1}, Composition{0, 0}));
  EXPECT_FALSE(contains(Composition{1, 1}, Composition{2, 1}));
}

TEST(Spectral, QtPoints) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::QT);
  const Scalar q = cfg.q();
  const Scalar t = cfg.t();
  EXPECT_EQ(spectral_qt(IntVector{0, 1}, cfg).coords, (std::vector<Scalar>{t.inverse(), q}));
  EXPECT_EQ(spectral_qt(IntVector{1, 0}, cfg).coords, (std::vector<Scalar>{q, t.inverse()}));
  EXPECT_EQ(tau(3, cfg), (std::vector<Scalar>{1, t.inverse(), t.pow(-2)}));
  // beta-tilde is the spectral point of -w_o beta.
  EXPECT_EQ(tilde(Composition{1, 0}, cfg).coords, spectral_qt(IntVector{0, -1}, cfg).coords);
}

TEST(Spectral, JackPoints) {
  const FieldConfig cfg = FieldConfig::symbolic(Variant::R);
  const Scalar r = cfg.r();
  EXPECT_EQ(spectral_r(IntVector{0, 1}, cfg).coords, (std::vector<Scalar>{-r, Scalar(1)}));
  EXPECT_EQ(rho(3, cfg), (std::vector<Scalar>{0, -r, -2 * r}));
}

TEST(Spectral, PointsAreDistinctAtDeskScale) {
  const FieldConfig cfg = FieldConfig::default_specialized_qt();
  std::set<std::vector<std::string>> seen;
  for (const auto& beta : enumerate_compositions(3, 3)) {
    std::vector<std::string> key;
    for (const auto& c : spectral(beta.as_vector(), cfg).coords) key.push_back(c.to_string());
    EXPECT_TRUE(seen.insert(key).second) << beta.to_string();
  }
}

}  // namespace
}  // namespace macdonald
