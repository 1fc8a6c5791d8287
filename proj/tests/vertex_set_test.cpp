#include <gtest/gtest.h>

#include <random>

#include "berge/vertex_set.hpp"

using namespace berge;

TEST(VertexSet, BasicMembership) {
  VertexSet s{1, 3, 64};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(s.max(), 64);
  EXPECT_EQ(s.vertices(), (std::vector<Vertex>{1, 3, 64}));
  EXPECT_EQ(s.to_string(), "{1,3,64}");
}

TEST(VertexSet, RejectsVerticesOutsideRange) {
  VertexSet s;
  EXPECT_THROW(s.insert(0), BudgetError);
  EXPECT_THROW(s.insert(65), BudgetError);
}

TEST(VertexSet, OrderMatchesLexicographicVertexLists) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> bits(0, (1u << 10) - 1);
  for (int i = 0; i < 5000; ++i) {
    VertexSet a(bits(rng)), b(bits(rng));
    EXPECT_EQ(a < b, a.vertices() < b.vertices()) << a.to_string() << " vs " << b.to_string();
  }
}

TEST(ShadowPair, NormalisesOrderAndRejectsLoops) {
  ShadowPair p(5, 2);
  EXPECT_EQ(p.u, 2);
  EXPECT_EQ(p.v, 5);
  EXPECT_THROW(ShadowPair(3, 3), InvalidInput);
}
