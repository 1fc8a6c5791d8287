#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "berge/error.hpp"
#include "berge/vertex_set.hpp"

namespace berge {

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

/// An r-uniform hypergraph on the vertex set [n].
///
/// Edges are kept sorted in lexicographic order and are pairwise distinct.
/// Vertices may be isolated, so n can exceed the support of the edges.
class Hypergraph {
 public:
  Hypergraph(int n, int r) : n_(n), r_(r) {
    if (n < 1) throw ParameterError("hypergraph needs n >= 1");
    if (n > kMaxVertices) throw BudgetError("hypergraph wider than 64 vertices");
    if (r < 2) throw ParameterError("hypergraph uniformity must be >= 2");
  }

  Hypergraph(int n, int r, std::vector<VertexSet> edges) : Hypergraph(n, r) {
    const VertexSet universe = VertexSet::range(1, n);
    for (VertexSet e : edges) {
      if (e.size() != r) throw InvalidInput("edge " + e.to_string() + " does not have " + std::to_string(r) + " vertices");
      if (!universe.contains(e)) throw InvalidInput("edge " + e.to_string() + " leaves [1, n]");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw InvalidInput("duplicate edge in hypergraph");
    edges_ = std::move(edges);
  }

  static Hypergraph from_lists(int n, int r, const std::vector<std::vector<Vertex>>& lists) {
    std::vector<VertexSet> edges;
    edges.reserve(lists.size());
    for (const auto& l : lists) {
      VertexSet e;
      for (Vertex v : l) {
        if (v < 1 || v > n) throw InvalidInput("vertex " + std::to_string(v) + " outside [1, n]");
        if (e.contains(v)) throw InvalidInput("repeated vertex inside an edge");
        e.insert(v);
      }
      edges.push_back(e);
    }
    return Hypergraph(n, r, std::move(edges));
  }

  int order() const { return n_; }
  int uniformity() const { return r_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  VertexSet vertex_set() const { return VertexSet::range(1, n_); }

  bool contains(VertexSet e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

  /// Index of `e` in edges(), or -1.
  int index_of(VertexSet e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return (it != edges_.end() && *it == e) ? int(it - edges_.begin()) : -1;
  }

  Hypergraph with_edge(VertexSet e) const {
    auto edges = edges_;
    edges.push_back(e);
    return Hypergraph(n_, r_, std::move(edges));
  }

  /// Sub-hypergraph keeping only the listed edges (all must belong to this one).
  Hypergraph with_edges(std::vector<VertexSet> edges) const { return Hypergraph(n_, r_, std::move(edges)); }

  /// Edges fully inside `vs`.
  std::vector<VertexSet> edges_within(VertexSet vs) const {
    std::vector<VertexSet> out;
    for (VertexSet e : edges_)
      if (vs.contains(e)) out.push_back(e);
    return out;
  }

  /// Image under the vertex map perm[v] (perm indexed 1..n).
  Hypergraph relabeled(const std::vector<Vertex>& perm) const {
    std::vector<VertexSet> edges;
    edges.reserve(edges_.size());
    for (VertexSet e : edges_) {
      VertexSet img;
      e.for_each([&](Vertex v) { img.insert(perm[v]); });
      edges.push_back(img);
    }
    return Hypergraph(n_, r_, std::move(edges));
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int n_;
  int r_;
  std::vector<VertexSet> edges_;
};

/// A simple undirected graph on [n], stored as adjacency bitmasks.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n) : n_(n), adj_(std::size_t(n) + 1) {
    if (n < 1) throw ParameterError("graph needs n >= 1");
    if (n > kMaxVertices) throw BudgetError("graph wider than 64 vertices");
  }

  SimpleGraph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) {
      if (has_edge(u, v)) throw InvalidInput("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      add_edge(u, v);
    }
  }

  int order() const { return n_; }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  VertexSet neighbours(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  VertexSet vertex_set() const { return VertexSet::range(1, n_); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex v = 1; v <= n_; ++v) twice += adj_[v].size();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<ShadowPair> edges() const {
    std::vector<ShadowPair> out;
    for (Vertex u = 1; u <= n_; ++u)
      (adj_[u] - VertexSet::range(1, u)).for_each([&](Vertex v) { out.emplace_back(u, v); });
    return out;
  }

  /// Non-adjacent pairs u < v, in lexicographic order.
  std::vector<ShadowPair> non_edges() const {
    std::vector<ShadowPair> out;
    for (Vertex u = 1; u <= n_; ++u)
      (VertexSet::range(u + 1, n_) - adj_[u]).for_each([&](Vertex v) { out.emplace_back(u, v); });
    return out;
  }

  /// Subgraph induced on `vs` (vertex ids unchanged).
  SimpleGraph induced(VertexSet vs) const {
    SimpleGraph g(n_);
    vs.for_each([&](Vertex v) { g.adj_[v] = adj_[v] & vs; });
    return g;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check(Vertex v) const {
    if (v < 1 || v > n_) throw InvalidInput("vertex " + std::to_string(v) + " outside [1, n]");
  }

  int n_;
  std::vector<VertexSet> adj_;
};

/// Calls f on every k-subset of `from`, in lexicographic order.
template <class F>
void for_each_subset_of_size(VertexSet from, int k, F&& f) {
  const auto vs = from.vertices();
  const int m = int(vs.size());
  if (k < 0 || k > m) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s;
    for (int i : idx) s.insert(vs[i]);
    f(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// The p-shadow: all p-sets contained in at least one edge, lexicographically sorted.
inline std::vector<VertexSet> shadow(const Hypergraph& h, int p) {
  if (p < 1 || p > h.uniformity())
    throw ParameterError("shadow size p must satisfy 1 <= p <= r, got " + std::to_string(p));
  std::vector<VertexSet> out;
  for (VertexSet e : h.edges()) for_each_subset_of_size(e, p, [&](VertexSet s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The 2-shadow as a graph on [n]: every edge becomes an r-clique.
inline SimpleGraph shadow_graph(const Hypergraph& h) {
  SimpleGraph g(h.order());
  for (VertexSet e : h.edges()) {
    const auto vs = e.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j)
        if (!g.has_edge(vs[i], vs[j])) g.add_edge(vs[i], vs[j]);
  }
  return g;
}

/// Pairs of [n] contained in no edge.
inline std::vector<ShadowPair> shadow_complement(const Hypergraph& h) {
  return shadow_graph(h).non_edges();
}

/// The complete r-graph on [w].
inline Hypergraph complete_r_graph(int w, int r) {
  if (r < 2) throw ParameterError("uniformity must be >= 2");
  if (w < r) throw ParameterError("complete r-graph needs w >= r");
  std::vector<VertexSet> edges;
  for_each_subset_of_size(VertexSet::range(1, w), r, [&](VertexSet s) { edges.push_back(s); });
  return Hypergraph(w, r, std::move(edges));
}

/// A simple graph viewed as a 2-uniform hypergraph.
inline Hypergraph as_hypergraph(const SimpleGraph& g) {
  std::vector<VertexSet> edges;
  for (auto p : g.edges()) edges.push_back(p.as_set());
  return Hypergraph(g.order(), 2, std::move(edges));
}

/// A 2-uniform hypergraph viewed as a simple graph.
inline SimpleGraph as_graph(const Hypergraph& h) {
  if (h.uniformity() != 2) throw InvalidInput("only 2-uniform hypergraphs are graphs");
  SimpleGraph g(h.order());
  for (VertexSet e : h.edges()) g.add_edge(e.min(), e.max());
  return g;
}

/// Connected in the sense of the 2-shadow over all of [n] (isolated vertices disconnect).
inline bool is_connected(const SimpleGraph& g) {
  VertexSet seen{1};
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
    frontier = next - seen;
    seen |= next;
  }
  return seen == g.vertex_set();
}

inline bool is_connected(const Hypergraph& h) { return is_connected(shadow_graph(h)); }

/// Vertex sets of the connected components, ordered by smallest vertex.
inline std::vector<VertexSet> components(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertex_set();
  while (!left.empty()) {
    VertexSet comp{left.min()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
      frontier = next - comp;
      comp |= next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

}  // namespace berge
