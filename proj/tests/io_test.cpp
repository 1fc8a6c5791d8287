#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "berge/canonical.hpp"
#include "berge/io.hpp"
#include "oracles.hpp"

using namespace berge;

TEST(HygFormat, ParsesCommentsAndEdges) {
  std::istringstream in("# K4 minus one triple\n4 3\n1 2 3\n\n# another\n2 3 4\n1 2 4\n");
  auto h = read_hyg(in);
  EXPECT_EQ(h.order(), 4);
  EXPECT_EQ(h.uniformity(), 3);
  EXPECT_EQ(h.edges(), (std::vector<VertexSet>{{1, 2, 3}, {1, 2, 4}, {2, 3, 4}}));
}

TEST(HygFormat, WriterEmitsLexicographicEdges) {
  auto h = Hypergraph::from_lists(5, 3, {{3, 4, 5}, {1, 2, 5}, {1, 2, 3}});
  EXPECT_EQ(write_hyg(h), "5 3\n1 2 3\n1 2 5\n3 4 5\n");
}

TEST(HygFormat, RejectsBadInput) {
  for (const char* text : {"", "4\n", "4 3\n1 2\n", "4 3\n1 2 3\n3 2 1\n", "4 3\n1 2 9\n", "4 3\n1 2 x\n",
                           "4 3\n1 1 2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_hyg(in), InvalidInput) << text;
  }
}

TEST(HygFormat, RoundTripPreservesTheHypergraph) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    auto h = oracle::random_hypergraph(rng, 7, 3, 0.3);
    std::istringstream in(write_hyg(h, "random"));
    auto back = read_hyg(in);
    EXPECT_EQ(back, h);
    EXPECT_EQ(canonical_label(back), canonical_label(h));
  }
}

TEST(ElgFormat, ParsesAndWrites) {
  std::istringstream in("# path\n4\n1 2\n3 2\n3 4\n");
  auto g = read_elg(in);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.has_edge(2, 3));
  EXPECT_EQ(write_elg(g), "4\n1 2\n2 3\n3 4\n");
}

TEST(ElgFormat, RejectsBadInput) {
  for (const char* text : {"", "0\n", "3\n1 1\n", "3\n1 2\n2 1\n", "3\n1 4\n", "3\n1 2 3\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_elg(in), InvalidInput) << text;
  }
}
