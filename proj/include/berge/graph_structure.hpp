#pragma once

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Vertex budget for exact cycle and path search in simple graphs.
inline constexpr int kGraphSearchMaxVertices = 14;

// ---------------------------------------------------------------------------
// Block decomposition
// ---------------------------------------------------------------------------

/// A maximal 2-connected subgraph, or a bridge (two vertices, one edge).
struct Block {
  VertexSet vertices;
  std::vector<ShadowPair> edges;
};

struct BlockDecomposition {
  /// Sorted by vertex set.
  std::vector<Block> blocks;
  VertexSet cut_vertices;
  /// For each cut vertex, the indices of the blocks that contain it.
  std::vector<std::pair<Vertex, std::vector<std::size_t>>> cut_vertex_blocks;

  /// Index of the block that holds edge uv, or -1.
  int block_of_edge(Vertex u, Vertex v) const {
    const ShadowPair p(u, v);
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (std::binary_search(blocks[i].edges.begin(), blocks[i].edges.end(), p)) return int(i);
    return -1;
  }
};

namespace detail {

class BlockFinder {
 public:
  explicit BlockFinder(const SimpleGraph& g)
      : g_(g), disc_(std::size_t(g.order()) + 1, 0), low_(std::size_t(g.order()) + 1, 0) {}

  std::vector<Block> run() {
    for (Vertex v = 1; v <= g_.order(); ++v)
      if (!disc_[v]) visit(v, 0);
    return std::move(blocks_);
  }

 private:
  void visit(Vertex u, Vertex parent) {
    disc_[u] = low_[u] = ++time_;
    g_.neighbours(u).for_each([&](Vertex v) {
      if (!disc_[v]) {
        stack_.emplace_back(u, v);
        visit(v, u);
        low_[u] = std::min(low_[u], low_[v]);
        if (low_[v] >= disc_[u]) pop_block(ShadowPair(u, v));
      } else if (v != parent && disc_[v] < disc_[u]) {
        stack_.emplace_back(u, v);
        low_[u] = std::min(low_[u], disc_[v]);
      }
    });
  }

  void pop_block(ShadowPair last) {
    Block b;
    while (true) {
      const ShadowPair e = stack_.back();
      stack_.pop_back();
      b.edges.push_back(e);
      b.vertices.insert(e.u);
      b.vertices.insert(e.v);
      if (e == last) break;
    }
    std::sort(b.edges.begin(), b.edges.end());
    blocks_.push_back(std::move(b));
  }

  const SimpleGraph& g_;
  std::vector<int> disc_, low_;
  int time_ = 0;
  std::vector<ShadowPair> stack_;
  std::vector<Block> blocks_;
};

}  // namespace detail

/// Unique decomposition of `g` into blocks. Isolated vertices belong to no block.
inline BlockDecomposition blocks(const SimpleGraph& g) {
  BlockDecomposition d;
  d.blocks = detail::BlockFinder(g).run();
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  for (Vertex v = 1; v <= g.order(); ++v) {
    std::vector<std::size_t> in;
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
      if (d.blocks[i].vertices.contains(v)) in.push_back(i);
    if (in.size() >= 2) {
      d.cut_vertices.insert(v);
      d.cut_vertex_blocks.emplace_back(v, std::move(in));
    }
  }
  return d;
}

/// At least three vertices, connected, and no cut vertex.
inline bool is_two_connected(const SimpleGraph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  for (Vertex x = 1; x <= g.order(); ++x) {
    const VertexSet rest = g.vertex_set() - VertexSet{x};
    VertexSet seen{rest.min()};
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
      next &= rest;
      frontier = next - seen;
      seen |= next;
    }
    if (seen != rest) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Disintegration
// ---------------------------------------------------------------------------

struct DisintegrationTrace {
  int alpha = 0;
  /// (vertex, its degree when removed), in removal order.
  std::vector<std::pair<Vertex, int>> removal_order;
  /// Surviving vertices: the (alpha+1)-core.
  VertexSet core;
};

/// Repeatedly deletes a vertex of degree <= alpha, choosing the first eligible
/// vertex in `priority` (all of [n], in any order).
inline DisintegrationTrace disintegrate(const SimpleGraph& g, int alpha, std::span<const Vertex> priority) {
  if (alpha < 0) throw ParameterError("disintegration threshold must be >= 0");
  DisintegrationTrace t;
  t.alpha = alpha;
  VertexSet alive = g.vertex_set();
  while (true) {
    bool removed = false;
    for (Vertex v : priority) {
      if (!alive.contains(v)) continue;
      const int deg = (g.neighbours(v) & alive).size();
      if (deg <= alpha) {
        t.removal_order.emplace_back(v, deg);
        alive.erase(v);
        removed = true;
        break;
      }
    }
    if (!removed) break;
  }
  t.core = alive;
  return t;
}

/// Disintegration removing the lowest eligible vertex id first.
inline DisintegrationTrace disintegrate(const SimpleGraph& g, int alpha) {
  std::vector<Vertex> order(std::size_t(g.order()));
  for (int i = 0; i < g.order(); ++i) order[i] = i + 1;
  return disintegrate(g, alpha, order);
}

// ---------------------------------------------------------------------------
// Exact cycles and paths
// ---------------------------------------------------------------------------

/// A cycle as its vertex sequence (length = number of vertices; 0 = none).
struct GraphCycle {
  int length = 0;
  std::vector<Vertex> vertices;
};

/// A path as its vertex sequence (length = number of edges).
struct GraphPath {
  int length = 0;
  std::vector<Vertex> vertices;
};

namespace detail {

inline void check_graph_budget(const SimpleGraph& g, int max_vertices) {
  if (g.order() > max_vertices)
    throw BudgetError("exact search: n = " + std::to_string(g.order()) + " exceeds budget " +
                      std::to_string(max_vertices));
}

// Vertices of `avail` reachable from `from` through `avail`.
inline VertexSet reach(const SimpleGraph& g, Vertex from, VertexSet avail) {
  VertexSet seen = g.neighbours(from) & avail;
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= g.neighbours(v); });
    next &= avail;
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

// DFS over simple paths. Cycles are rooted at their smallest vertex and
// oriented so the second vertex is smaller than the last. Records anything
// longer than `best`, and stops once `best >= stop_at`.
class GraphWalk {
 public:
  GraphWalk(const SimpleGraph& g, bool cycles, int floor, int stop_at)
      : g_(g), cycles_(cycles), best_(floor), stop_at_(stop_at) {}

  void run() {
    const int n = g_.order();
    for (Vertex s = 1; s <= n && !done(); ++s) {
      if (cycles_ && n - s + 1 <= best_) break;
      start_ = s;
      path_.assign(1, s);
      const VertexSet allowed = cycles_ ? VertexSet::range(s + 1, n) : g_.vertex_set() - VertexSet{s};
      if (!cycles_ && best_ < 0) record();
      dfs(s, allowed);
    }
  }

  template <class F>
  void enumerate_cycles(F&& f) {
    const int n = g_.order();
    for (Vertex s = 1; s <= n; ++s) {
      start_ = s;
      path_.assign(1, s);
      enumerate(s, VertexSet::range(s + 1, n), f);
    }
  }

  int best() const { return best_; }
  const std::vector<Vertex>& witness() const { return witness_; }

 private:
  bool done() const { return best_ >= stop_at_; }

  void record() {
    best_ = cycles_ ? int(path_.size()) : int(path_.size()) - 1;
    witness_ = path_;
  }

  void dfs(Vertex v, VertexSet avail) {
    const int depth = int(path_.size());
    if (cycles_) {
      if (depth >= 3 && depth > best_ && g_.has_edge(v, start_) && path_[1] < v) record();
    } else if (depth >= 2 && depth - 1 > best_ && path_.front() < v) {
      record();
    }
    if (done()) return;
    const VertexSet r = reach(g_, v, avail);
    const int gain = cycles_ ? depth + r.size() : depth - 1 + r.size();
    if (gain <= best_) return;
    if (cycles_ && !r.intersects(g_.neighbours(start_))) return;
    (g_.neighbours(v) & avail).for_each([&](Vertex u) {
      if (done()) return;
      path_.push_back(u);
      dfs(u, avail - VertexSet{u});
      path_.pop_back();
    });
  }

  template <class F>
  void enumerate(Vertex v, VertexSet avail, F& f) {
    const int depth = int(path_.size());
    if (depth >= 3 && g_.has_edge(v, start_) && path_[1] < v) f(path_);
    const VertexSet r = reach(g_, v, avail);
    if (!r.intersects(g_.neighbours(start_))) return;
    (g_.neighbours(v) & avail).for_each([&](Vertex u) {
      path_.push_back(u);
      enumerate(u, avail - VertexSet{u}, f);
      path_.pop_back();
    });
  }

  const SimpleGraph& g_;
  bool cycles_;
  int best_;
  int stop_at_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  std::vector<Vertex> witness_;
};

}  // namespace detail

/// Exact circumference with a witness cycle (length 0 when acyclic).
inline GraphCycle longest_cycle(const SimpleGraph& g, int max_vertices = kGraphSearchMaxVertices) {
  detail::check_graph_budget(g, max_vertices);
  detail::GraphWalk w(g, true, 0, INT_MAX);
  w.run();
  return {w.best(), w.witness()};
}

/// A cycle of length >= k if one exists.
inline std::optional<GraphCycle> find_cycle_at_least(const SimpleGraph& g, int k,
                                                     int max_vertices = kGraphSearchMaxVertices) {
  detail::check_graph_budget(g, max_vertices);
  const int need = std::max(k, 3);
  detail::GraphWalk w(g, true, need - 1, need);
  w.run();
  if (w.best() < need) return std::nullopt;
  return GraphCycle{w.best(), w.witness()};
}

/// Exact longest path (edge count) with witness.
inline GraphPath longest_path(const SimpleGraph& g, int max_vertices = kGraphSearchMaxVertices) {
  detail::check_graph_budget(g, max_vertices);
  detail::GraphWalk w(g, false, -1, INT_MAX);
  w.run();
  return {w.best(), w.witness()};
}

/// Calls f(vertices) once per cycle of `g` (rooted at its smallest vertex, one orientation).
inline void for_each_cycle(const SimpleGraph& g, const std::function<void(const std::vector<Vertex>&)>& f,
                           int max_vertices = kGraphSearchMaxVertices) {
  detail::check_graph_budget(g, max_vertices);
  detail::GraphWalk w(g, true, 0, INT_MAX);
  w.enumerate_cycles(f);
}

/// True when `vs` is a cycle of `g` (distinct vertices, consecutive adjacency, length >= 3).
inline bool is_cycle_of(const SimpleGraph& g, const std::vector<Vertex>& vs) {
  if (vs.size() < 3) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex a = vs[i], b = vs[(i + 1) % vs.size()];
    if (a < 1 || a > g.order() || seen.contains(a) || !g.has_edge(a, b)) return false;
    seen.insert(a);
  }
  return true;
}

/// True when `vs` is a path of `g` (distinct vertices, consecutive adjacency).
inline bool is_path_of(const SimpleGraph& g, const std::vector<Vertex>& vs) {
  if (vs.empty()) return false;
  VertexSet seen;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex a = vs[i];
    if (a < 1 || a > g.order() || seen.contains(a)) return false;
    if (i + 1 < vs.size() && !g.has_edge(a, vs[i + 1])) return false;
    seen.insert(a);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Saturation and Kopylov structure
// ---------------------------------------------------------------------------

/// Adds non-edges in lexicographic order whenever that keeps every cycle
/// shorter than k. The result has no cycle of length >= k and adding any
/// remaining non-edge creates one.
inline SimpleGraph saturate_no_long_cycle(const SimpleGraph& g, int k, int max_vertices = kGraphSearchMaxVertices) {
  detail::check_graph_budget(g, max_vertices);
  if (find_cycle_at_least(g, k, max_vertices))
    throw InvalidInput("saturate_no_long_cycle: graph already has a cycle of length >= " + std::to_string(k));
  SimpleGraph out = g;
  for (ShadowPair p : g.non_edges()) {
    out.add_edge(p.u, p.v);
    if (find_cycle_at_least(out, k, max_vertices)) out.remove_edge(p.u, p.v);
  }
  return out;
}

/// No cycle of length >= k, and every non-edge would create one.
inline bool is_saturated_no_long_cycle(const SimpleGraph& g, int k, int max_vertices = kGraphSearchMaxVertices) {
  if (find_cycle_at_least(g, k, max_vertices)) return false;
  SimpleGraph probe = g;
  for (ShadowPair p : g.non_edges()) {
    probe.add_edge(p.u, p.v);
    const bool creates = find_cycle_at_least(probe, k, max_vertices).has_value();
    probe.remove_edge(p.u, p.v);
    if (!creates) return false;
  }
  return true;
}

/// Structure certificate for a saturated 2-connected graph without long cycles.
struct KopylovWitness {
  enum class Case {
    /// The t-core is empty.
    Disintegrable,
    /// The t-core is a clique on s vertices, t+2 <= s <= k-2, and equals the (k-s)-core.
    Core,
  };
  Case kind = Case::Disintegrable;
  int k = 0;
  int t = 0;
  DisintegrationTrace t_trace;
  /// Core case only.
  int s = 0;
  DisintegrationTrace complement_trace;
};

inline const char* to_string(KopylovWitness::Case c) {
  return c == KopylovWitness::Case::Disintegrable ? "disintegrable" : "core";
}

inline bool is_clique(const SimpleGraph& g, VertexSet vs) {
  bool ok = true;
  vs.for_each([&](Vertex v) { ok = ok && (g.neighbours(v) | VertexSet{v}).contains(vs); });
  return ok;
}

/// Re-checks a witness against `g` from scratch.
inline bool validate_kopylov_witness(const SimpleGraph& g, const KopylovWitness& w) {
  const int t = (w.k - 1) / 2;
  if (w.t != t) return false;
  const auto t_core = disintegrate(g, t);
  if (w.t_trace.core != t_core.core) return false;
  for (auto [v, deg] : w.t_trace.removal_order)
    if (deg > t) return false;
  if (w.kind == KopylovWitness::Case::Disintegrable) return t_core.core.empty();
  const VertexSet core = t_core.core;
  if (core.size() != w.s || w.s < t + 2 || w.s > w.k - 2) return false;
  if (!is_clique(g, core)) return false;
  const int beta = w.k - w.s;
  if (beta < 2 || beta > t) return false;
  if (w.complement_trace.alpha != beta || w.complement_trace.core != core) return false;
  return disintegrate(g, beta).core == core;
}

/// Certificate that a 2-connected, saturated graph without cycles of length
/// >= k is either t-disintegrable or has a clique core, t = floor((k-1)/2).
/// With `saturate_first`, the graph is saturated before checking.
inline KopylovWitness kopylov_witness(const SimpleGraph& input, int k, bool saturate_first = false,
                                      int max_vertices = kGraphSearchMaxVertices) {
  const int n = input.order();
  if (k < 5 || n < k) throw ParameterError("kopylov_witness needs n >= k >= 5");
  detail::check_graph_budget(input, max_vertices);
  if (!is_two_connected(input)) throw InvalidInput("kopylov_witness: graph is not 2-connected");
  const SimpleGraph g = saturate_first ? saturate_no_long_cycle(input, k, max_vertices) : input;
  if (!is_saturated_no_long_cycle(g, k, max_vertices))
    throw InvalidInput("kopylov_witness: graph is not saturated without cycles of length >= " + std::to_string(k));

  KopylovWitness w;
  w.k = k;
  w.t = (k - 1) / 2;
  w.t_trace = disintegrate(g, w.t);
  if (w.t_trace.core.empty()) {
    w.kind = KopylovWitness::Case::Disintegrable;
  } else {
    w.kind = KopylovWitness::Case::Core;
    w.s = w.t_trace.core.size();
    if (w.k - w.s >= 0) w.complement_trace = disintegrate(g, w.k - w.s);
  }
  if (!validate_kopylov_witness(g, w))
    throw ConsistencyError("kopylov_witness: t-core " + w.t_trace.core.to_string() + " matches neither case");
  return w;
}

}  // namespace berge
