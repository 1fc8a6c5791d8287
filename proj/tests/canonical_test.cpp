#include <gtest/gtest.h>

#include <random>

#include "berge/canonical.hpp"
#include "berge/enumerate.hpp"
#include "oracles.hpp"

using namespace berge;

TEST(CanonicalForm, SameEdgeSetSameLabel) {
  auto a = Hypergraph::from_lists(3, 3, {{1, 2, 3}});
  auto b = Hypergraph::from_lists(3, 3, {{1, 3, 2}});
  EXPECT_EQ(canonical_label(a), canonical_label(b));
}

TEST(CanonicalForm, RelabelingGivesSameLabel) {
  auto a = Hypergraph::from_lists(4, 3, {{1, 2, 3}});
  auto b = Hypergraph::from_lists(4, 3, {{2, 3, 4}});
  EXPECT_EQ(canonical_label(a), canonical_label(b));
}

TEST(CanonicalForm, DistinguishesIntersectionSizes) {
  auto a = Hypergraph::from_lists(5, 3, {{1, 2, 3}, {1, 2, 4}});
  auto b = Hypergraph::from_lists(5, 3, {{1, 2, 3}, {1, 4, 5}});
  ASSERT_FALSE(oracle::isomorphic(a, b));  // checked over all 120 permutations
  EXPECT_NE(canonical_label(a), canonical_label(b));
}

TEST(CanonicalForm, RepresentativeIsTheRelabeledInput) {
  auto h = Hypergraph::from_lists(6, 3, {{1, 2, 3}, {3, 4, 5}, {1, 5, 6}});
  auto cf = canonical_form(h);
  EXPECT_EQ(cf.representative, h.relabeled(cf.labeling));
}

TEST(CanonicalForm, BudgetIsEnforced) {
  EXPECT_THROW(canonical_form(Hypergraph(13, 3)), BudgetError);
  EXPECT_NO_THROW(canonical_form(Hypergraph(13, 3), 13));
}

TEST(CanonicalForm, HighlySymmetricInputsAreFast) {
  EXPECT_EQ(canonical_form(Hypergraph(12, 3)).representative.size(), 0u);
  EXPECT_EQ(canonical_form(complete_r_graph(12, 3)).representative.size(), 220u);
}

TEST(CanonicalForm, InvariantUnderRandomPermutations) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + int(rng() % 7);
    const int r = 2 + int(rng() % 2);
    auto h = oracle::random_hypergraph(rng, n, r, 0.3);
    const auto label = canonical_label(h);
    for (int j = 0; j < 5; ++j) EXPECT_EQ(canonical_label(h.relabeled(oracle::random_permutation(rng, n))), label);
  }
}

TEST(CanonicalForm, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + int(rng() % 2);
    auto a = oracle::random_hypergraph_m(rng, n, 3, 4);
    auto b = oracle::random_hypergraph_m(rng, n, 3, 4);
    EXPECT_EQ(canonical_label(a) == canonical_label(b), oracle::isomorphic(a, b));
  }
}

TEST(Enumeration, CountsKnownIsomorphismClasses) {
  // Graphs on 4..6 vertices: 11, 34, 156 classes (standard OEIS A000088 values).
  EXPECT_EQ(enumerate_all_classes(4, 2).classes_visited, 11u);
  EXPECT_EQ(enumerate_all_classes(5, 2).classes_visited, 34u);
  EXPECT_EQ(enumerate_all_classes(6, 2).classes_visited, 156u);
  // 3-graphs on 5 vertices: 34 classes (A000665).
  EXPECT_EQ(enumerate_all_classes(5, 3).classes_visited, 34u);
}

TEST(Enumeration, ShardingDoesNotChangeTheResult) {
  EnumerationLimits lim;
  lim.jobs = 3;
  auto a = enumerate_all_classes(6, 2);
  auto b = enumerate_all_classes(6, 2, lim);
  ASSERT_EQ(a.levels.size(), b.levels.size());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    ASSERT_EQ(a.levels[i].size(), b.levels[i].size());
    for (std::size_t j = 0; j < a.levels[i].size(); ++j) EXPECT_EQ(a.levels[i][j].label, b.levels[i][j].label);
  }
}

TEST(Enumeration, ClassLimitMakesItNonExhaustive) {
  EnumerationLimits lim;
  lim.max_classes = 10;
  auto e = enumerate_all_classes(6, 2, lim);
  EXPECT_FALSE(e.exhaustive);
}
