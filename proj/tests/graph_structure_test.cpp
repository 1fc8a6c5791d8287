#include <gtest/gtest.h>

#include <random>

#include "berge/enumerate.hpp"
#include "berge/graph_structure.hpp"
#include "oracles.hpp"

using namespace berge;

namespace {

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g = path_graph(n);
  g.add_edge(n, 1);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  return g;
}

// K_4 on {1,2,3,4} plus vertices 5..n each joined to 1 and 2.
SimpleGraph book(int n) {
  SimpleGraph g = complete_graph(4);
  SimpleGraph out(n);
  for (auto p : g.edges()) out.add_edge(p.u, p.v);
  for (Vertex v = 5; v <= n; ++v) {
    out.add_edge(v, 1);
    out.add_edge(v, 2);
  }
  return out;
}

}  // namespace

TEST(Blocks, PathSplitsAtMiddleVertex) {
  auto d = blocks(path_graph(3));
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0].vertices, (VertexSet{1, 2}));
  EXPECT_EQ(d.blocks[1].vertices, (VertexSet{2, 3}));
  EXPECT_EQ(d.cut_vertices, (VertexSet{2}));
}

TEST(Blocks, TwoCliquesSharingAVertex) {
  SimpleGraph g(9);
  for (Vertex u = 1; u <= 5; ++u)
    for (Vertex v = u + 1; v <= 5; ++v) g.add_edge(u, v);
  for (Vertex u = 5; u <= 9; ++u)
    for (Vertex v = u + 1; v <= 9; ++v) g.add_edge(u, v);
  auto d = blocks(g);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0].vertices.size(), 5);
  EXPECT_EQ(d.blocks[1].vertices.size(), 5);
  EXPECT_EQ(d.cut_vertices, (VertexSet{5}));
  ASSERT_EQ(d.cut_vertex_blocks.size(), 1u);
  EXPECT_EQ(d.cut_vertex_blocks[0].second, (std::vector<std::size_t>{0, 1}));
}

TEST(Blocks, CompleteGraphIsOneBlock) {
  auto d = blocks(complete_graph(4));
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].edges.size(), 6u);
  EXPECT_TRUE(d.cut_vertices.empty());
}

TEST(Blocks, EdgePartitionAndVertexCountOnRandomGraphs) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + int(rng() % 10);
    auto g = oracle::random_graph(rng, n, 0.3);
    auto d = blocks(g);
    std::vector<ShadowPair> all;
    int sum = 0;
    for (const auto& b : d.blocks) {
      all.insert(all.end(), b.edges.begin(), b.edges.end());
      sum += b.vertices.size() - 1;
      if (b.vertices.size() == 2) {
        EXPECT_EQ(b.edges.size(), 1u);
      }
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.edges());
    EXPECT_EQ(sum, n - int(components(g).size()));
  }
}

TEST(Blocks, BlocksOfSizeThreeOrMoreAreTwoConnected) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_graph(rng, 9, 0.3);
    for (const auto& b : blocks(g).blocks) {
      if (b.vertices.size() < 3) continue;
      // Relabel the block onto [1, size] and test 2-connectivity there.
      const auto vs = b.vertices.vertices();
      SimpleGraph h(int(vs.size()));
      auto id = [&](Vertex v) { return int(std::find(vs.begin(), vs.end(), v) - vs.begin()) + 1; };
      for (auto e : b.edges) h.add_edge(id(e.u), id(e.v));
      EXPECT_TRUE(is_two_connected(h));
    }
  }
}

TEST(Disintegrate, Examples) {
  EXPECT_TRUE(disintegrate(cycle_graph(5), 2).core.empty());
  EXPECT_EQ(disintegrate(complete_graph(4), 2).core, (VertexSet{1, 2, 3, 4}));
  SimpleGraph g(5);
  for (auto p : complete_graph(4).edges()) g.add_edge(p.u, p.v);
  g.add_edge(1, 5);
  auto t = disintegrate(g, 2);
  EXPECT_EQ(t.removal_order, (std::vector<std::pair<Vertex, int>>{{5, 1}}));
  EXPECT_EQ(t.core, (VertexSet{1, 2, 3, 4}));
  EXPECT_THROW(disintegrate(g, -1), ParameterError);
}

TEST(Disintegrate, CoreIndependentOfDeletionOrder) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = oracle::random_graph(rng, 12, 0.35);
    for (int alpha = 0; alpha <= 4; ++alpha) {
      const auto reference = disintegrate(g, alpha);
      EXPECT_TRUE(reference.core.empty() || [&] {
        bool ok = true;
        reference.core.for_each([&](Vertex v) { ok = ok && (g.neighbours(v) & reference.core).size() >= alpha + 1; });
        return ok;
      }());
      for (int rep = 0; rep < 100; ++rep) {
        auto perm = oracle::random_permutation(rng, 12);
        std::vector<Vertex> order(perm.begin() + 1, perm.end());
        const auto t = disintegrate(g, alpha, order);
        EXPECT_EQ(t.core, reference.core);
        for (auto [v, deg] : t.removal_order) EXPECT_LE(deg, alpha);
      }
    }
  }
}

TEST(LongestCycle, Examples) {
  EXPECT_EQ(longest_cycle(cycle_graph(5)).length, 5);
  EXPECT_EQ(longest_cycle(path_graph(6)).length, 0);
  auto g = complete_graph(4);
  g.remove_edge(1, 2);
  ASSERT_EQ(oracle::longest_cycle(g), 4);
  auto c = longest_cycle(g);
  EXPECT_EQ(c.length, 4);
  EXPECT_TRUE(is_cycle_of(g, c.vertices));
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_path(path_graph(4)).length, 3);
  EXPECT_EQ(longest_path(complete_graph(4)).length, 3);
  SimpleGraph star(4);
  for (Vertex v = 2; v <= 4; ++v) star.add_edge(1, v);
  ASSERT_EQ(oracle::longest_path(star), 2);
  auto p = longest_path(star);
  EXPECT_EQ(p.length, 2);
  EXPECT_TRUE(is_path_of(star, p.vertices));
  EXPECT_EQ(longest_path(SimpleGraph(3)).length, 0);
}

TEST(LongestCycleAndPath, MatchBruteForceOnRandomGraphs) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + int(rng() % 6);
    auto g = oracle::random_graph(rng, n, 0.2 + 0.1 * double(trial % 6));
    auto c = longest_cycle(g);
    auto p = longest_path(g);
    EXPECT_EQ(c.length, oracle::longest_cycle(g));
    EXPECT_EQ(p.length, oracle::longest_path(g));
    if (c.length) {
      EXPECT_TRUE(is_cycle_of(g, c.vertices));
    }
    EXPECT_TRUE(is_path_of(g, p.vertices));
    EXPECT_EQ(int(p.vertices.size()), p.length + 1);
  }
}

TEST(GraphEdgeBounds, HoldOverAllGraphsOnSixVertices) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& level : enumerate_all_classes(n, 2).levels)
      for (const auto& cf : level) {
        const SimpleGraph g = as_graph(cf.representative);
        const auto e = std::int64_t(g.edge_count());
        const int c = oracle::longest_cycle(g);
        const int p = oracle::longest_path(g);
        for (int k = 3; k <= n + 1; ++k) {
          if (c < k) {
            EXPECT_LE(2 * e, std::int64_t(k - 1) * (n - 1));
          }
          if (p <= k - 2) {
            EXPECT_LE(2 * e, std::int64_t(k - 2) * n);
          }
        }
      }
}

TEST(LongestCycle, BudgetIsEnforced) {
  EXPECT_THROW(longest_cycle(SimpleGraph(15)), BudgetError);
  EXPECT_NO_THROW(longest_cycle(SimpleGraph(15), 15));
}

TEST(ForEachCycle, CountsCyclesOfK5) {
  // K_5 has C(5,3)*1 + C(5,4)*3 + 12 = 10 + 15 + 12 = 37 cycles.
  int count = 0;
  for_each_cycle(complete_graph(5), [&](const std::vector<Vertex>&) { ++count; });
  EXPECT_EQ(count, 37);
}

TEST(Saturate, Examples) {
  EXPECT_EQ(saturate_no_long_cycle(complete_graph(4), 5), complete_graph(4));
  auto sat = saturate_no_long_cycle(path_graph(5), 5);
  EXPECT_LT(longest_cycle(sat).length, 5);
  EXPECT_TRUE(is_saturated_no_long_cycle(sat, 5));
  for (auto p : path_graph(5).edges()) EXPECT_TRUE(sat.has_edge(p.u, p.v));
  EXPECT_EQ(saturate_no_long_cycle(SimpleGraph(3), 5), complete_graph(3));
  EXPECT_THROW(saturate_no_long_cycle(cycle_graph(5), 5), InvalidInput);
}

TEST(StructureWitness, BookGraphHasACliqueCore) {
  // k = 6, t = 2: K_4 survives 2-disintegration; the rest goes by (6-4)-disintegration.
  auto g = book(7);
  ASSERT_TRUE(is_saturated_no_long_cycle(g, 6));
  auto w = kopylov_witness(g, 6);
  EXPECT_EQ(w.kind, KopylovWitness::Case::Core);
  EXPECT_EQ(w.s, 4);
  EXPECT_EQ(w.t_trace.core, (VertexSet{1, 2, 3, 4}));
  EXPECT_TRUE(validate_kopylov_witness(g, w));
}

TEST(StructureWitness, AllSaturatedTwoConnectedGraphsOnFiveVertices) {
  int checked = 0;
  for (const auto& level : enumerate_all_classes(5, 2).levels)
    for (const auto& cf : level) {
      const SimpleGraph g = as_graph(cf.representative);
      if (!is_two_connected(g) || find_cycle_at_least(g, 5)) continue;
      const auto w = kopylov_witness(g, 5, true);
      EXPECT_TRUE(validate_kopylov_witness(saturate_no_long_cycle(g, 5), w));
      ++checked;
    }
  EXPECT_GT(checked, 0);
}

TEST(StructureWitness, RejectsBadInput) {
  EXPECT_THROW(kopylov_witness(path_graph(6), 5), InvalidInput);
  EXPECT_THROW(kopylov_witness(complete_graph(4), 5), ParameterError);
  // 2-connected but not saturated.
  SimpleGraph c4(5);
  c4.add_edge(1, 2), c4.add_edge(2, 3), c4.add_edge(3, 4), c4.add_edge(4, 1), c4.add_edge(5, 1), c4.add_edge(5, 3);
  ASSERT_TRUE(is_two_connected(c4));
  EXPECT_THROW(kopylov_witness(c4, 6), ParameterError);
  EXPECT_THROW(kopylov_witness(c4, 5), InvalidInput);
  EXPECT_NO_THROW(kopylov_witness(c4, 5, true));
}
