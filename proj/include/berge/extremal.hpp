#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/berge_search.hpp"
#include "berge/enumerate.hpp"
#include "berge/error.hpp"
#include "berge/graph_structure.hpp"
#include "berge/hypergraph.hpp"
#include "berge/rational.hpp"

namespace berge {

// ---------------------------------------------------------------------------
// Bound formulas
// ---------------------------------------------------------------------------

/// Per-vertex coefficient C(k-1, r) / (k-2) of the long-cycle bound.
inline Rational c_r_k(int k, int r) {
  if (k < 3 || r < 2 || k - 1 < r) throw ParameterError("c_r_k needs k >= 3, r >= 2, k-1 >= r");
  return Rational(binomial(k - 1, r), k - 2);
}

/// Cap on |H| + |pairs outside the 2-shadow| for a w-vertex r-graph:
/// C(w,2) for w <= r+2, C(w,r) for w >= r+2.
inline std::int64_t a_r_w(int w, int r) {
  if (w < 2 || r < 2) throw ParameterError("a_r_w needs w >= 2, r >= 2");
  return w <= r + 2 ? binomial(w, 2) : binomial(w, r);
}

/// The long-cycle bound C_r(k) * (n-1).
inline Rational cycle_bound(int n, int k, int r) { return c_r_k(k, r) * Rational(n - 1); }

// ---------------------------------------------------------------------------
// Per-vertex inequality  a + C(s-a, r-1) <= C_r(k)  for 0 <= a <= s <= t
// ---------------------------------------------------------------------------

struct CoreInequalityVerdict {
  int k = 0;
  int r = 0;
  int t = 0;
  Rational bound;
  bool passed = true;
  /// True when run at k = r+2, where the inequality is expected to fail.
  bool boundary_mode = false;
  std::int64_t max_lhs = 0;
  int argmax_a = 0;
  int argmax_s = 0;
  /// First (a, s) whose left-hand side exceeds the bound.
  std::optional<std::pair<int, int>> counterexample;
};

inline CoreInequalityVerdict verify_lemma9(int k, int r) {
  if (r < 3) throw ParameterError("verify_lemma9 needs r >= 3");
  if (k < r + 2) throw ParameterError("verify_lemma9 needs k >= r+2");
  CoreInequalityVerdict v;
  v.k = k;
  v.r = r;
  v.t = (k - 1) / 2;
  v.bound = c_r_k(k, r);
  v.boundary_mode = (k == r + 2);
  v.max_lhs = -1;
  for (int s = 0; s <= v.t; ++s) {
    for (int a = 0; a <= s; ++a) {
      const std::int64_t lhs = a + binomial(s - a, r - 1);
      if (lhs > v.max_lhs) {
        v.max_lhs = lhs;
        v.argmax_a = a;
        v.argmax_s = s;
      }
      if (Rational(lhs) > v.bound && !v.counterexample) v.counterexample = std::make_pair(a, s);
    }
  }
  v.passed = !v.counterexample.has_value();
  return v;
}

// ---------------------------------------------------------------------------
// Edges plus missing shadow pairs on few vertices
// ---------------------------------------------------------------------------

struct FewVertexCapVerdict {
  int w = 0;
  int r = 0;
  int k = 0;
  std::int64_t edges = 0;
  std::int64_t missing_pairs = 0;
  std::int64_t cap = 0;
  bool cap_holds = true;
  bool cap_equality = false;
  /// For w >= r+2: equality with the cap iff H is complete, or w = r+2 and H is empty.
  bool cap_characterization_checked = false;
  bool cap_characterization_matches = true;

  /// Whether the comparison with (w-1) C_r(k) applies (2 <= w <= k-1, k >= r+3).
  bool bound_applicable = false;
  Rational bound;
  bool cap_within_bound = true;
  bool bound_equality = false;
  /// "complete" (w > r+2, H complete), "complete-or-empty-shadow" (w = r+2),
  /// or "none" when equality is not predicted.
  std::string predicted_branch = "none";
  /// Which clause actually produced equality: "H-complete", "shadow-complement-complete", or "none".
  std::string fired_branch = "none";
  bool characterization_matches = true;

  bool passed() const {
    return cap_holds && cap_characterization_matches && cap_within_bound && characterization_matches;
  }
};

inline FewVertexCapVerdict verify_lemma10(const Hypergraph& h, int k) {
  FewVertexCapVerdict v;
  v.w = h.order();
  v.r = h.uniformity();
  v.k = k;
  if (v.w < 2) throw ParameterError("verify_lemma10 needs at least two vertices");
  v.edges = std::int64_t(h.size());
  v.missing_pairs = std::int64_t(shadow_complement(h).size());
  v.cap = a_r_w(v.w, v.r);
  const std::int64_t lhs = v.edges + v.missing_pairs;
  v.cap_holds = lhs <= v.cap;
  v.cap_equality = lhs == v.cap;

  const bool complete = v.edges == binomial(v.w, v.r);
  const bool no_edges = v.edges == 0;
  if (v.w >= v.r + 2) {
    v.cap_characterization_checked = true;
    const bool predicted = complete || (v.w == v.r + 2 && no_edges);
    v.cap_characterization_matches = predicted == v.cap_equality;
  }

  if (k >= v.r + 3 && v.w <= k - 1) {
    v.bound_applicable = true;
    v.bound = Rational(v.w - 1) * c_r_k(k, v.r);
    v.cap_within_bound = Rational(v.cap) <= v.bound && ((Rational(v.cap) == v.bound) == (v.w == k - 1));
    v.bound_equality = Rational(lhs) == v.bound;
    bool predicted = false;
    if (v.w == k - 1) {
      if (v.w > v.r + 2) {
        v.predicted_branch = "complete";
        predicted = complete;
      } else if (v.w == v.r + 2) {
        v.predicted_branch = "complete-or-empty-shadow";
        predicted = complete || no_edges;
      }
    }
    if (v.bound_equality) v.fired_branch = complete ? "H-complete" : (no_edges ? "shadow-complement-complete" : "other");
    v.characterization_matches = predicted == v.bound_equality && Rational(lhs) <= v.bound;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Block-tree constructions
// ---------------------------------------------------------------------------

/// Where block j (j >= 1) is glued: onto `block` < j, at that block's
/// `local_vertex`-th vertex (0-based, in [0, k-2]).
struct BlockAttachment {
  std::size_t block = 0;
  int local_vertex = 0;
};

struct BlockTreeSpec {
  int k = 0;
  int r = 0;
  int p = 1;
  /// attachments[j-1] places block j.
  std::vector<BlockAttachment> attachments;

  int vertex_count() const { return 1 + p * (k - 2); }
};

/// Vertex lists of every block of a block tree, in block order.
inline std::vector<std::vector<Vertex>> block_tree_vertices(const BlockTreeSpec& spec) {
  if (spec.r < 2 || spec.k - 1 < spec.r) throw ParameterError("block tree needs r >= 2 and k-1 >= r");
  if (spec.p < 1) throw ParameterError("block tree needs p >= 1");
  if (int(spec.attachments.size()) != spec.p - 1) throw InvalidInput("block tree needs exactly p-1 attachments");
  if (spec.vertex_count() > kMaxVertices) throw BudgetError("block tree wider than 64 vertices");
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> first;
  for (Vertex v = 1; v <= spec.k - 1; ++v) first.push_back(v);
  blocks.push_back(std::move(first));
  Vertex next = spec.k;
  for (int j = 1; j < spec.p; ++j) {
    const auto& at = spec.attachments[std::size_t(j - 1)];
    if (at.block >= std::size_t(j)) throw InvalidInput("attachment must refer to an earlier block");
    if (at.local_vertex < 0 || at.local_vertex > spec.k - 2) throw InvalidInput("attachment vertex out of range");
    std::vector<Vertex> b{blocks[at.block][std::size_t(at.local_vertex)]};
    for (int i = 0; i < spec.k - 2; ++i) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

/// p copies of the complete r-graph on k-1 vertices glued along a tree at
/// single cut vertices; n = 1 + p(k-2) and |H| = C_r(k)(n-1).
inline Hypergraph build_block_tree(const BlockTreeSpec& spec) {
  const auto blocks = block_tree_vertices(spec);
  std::vector<VertexSet> edges;
  for (const auto& b : blocks)
    for_each_subset_of_size(VertexSet::of(b), spec.r, [&](VertexSet e) { edges.push_back(e); });
  return Hypergraph(spec.vertex_count(), spec.r, std::move(edges));
}

/// Every attachment pattern for p blocks (all choices of earlier block and vertex).
inline std::vector<BlockTreeSpec> all_block_tree_specs(int k, int r, int p) {
  std::vector<BlockTreeSpec> out{BlockTreeSpec{k, r, 1, {}}};
  for (int j = 1; j < p; ++j) {
    std::vector<BlockTreeSpec> grown;
    for (const auto& s : out)
      for (int b = 0; b < j; ++b)
        for (int v = 0; v <= k - 2; ++v) {
          BlockTreeSpec t = s;
          t.p = j + 1;
          t.attachments.push_back({std::size_t(b), v});
          grown.push_back(std::move(t));
        }
    out = std::move(grown);
  }
  return out;
}

/// True when every block of the 2-shadow is a (k-1)-clique inducing the
/// complete r-graph, and the 2-shadow is connected.
inline bool has_extremal_block_structure(const Hypergraph& h, int k) {
  const SimpleGraph sh = shadow_graph(h);
  if (!is_connected(sh)) return false;
  for (const Block& b : blocks(sh).blocks) {
    if (b.vertices.size() != k - 1) return false;
    if (std::int64_t(b.edges.size()) != binomial(k - 1, 2)) return false;
    if (std::int64_t(h.edges_within(b.vertices).size()) != binomial(k - 1, h.uniformity())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Long-cycle bound verification
// ---------------------------------------------------------------------------

enum class BoundStatus { NotApplicable, Strict, Equality, Violation };

inline const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::NotApplicable: return "not-applicable";
    case BoundStatus::Strict: return "strict";
    case BoundStatus::Equality: return "equality";
    default: return "VIOLATION";
  }
}

struct CycleBoundVerdict {
  BoundStatus status = BoundStatus::NotApplicable;
  std::int64_t edges = 0;
  Rational bound;
  /// Present when a Berge cycle of length >= k exists.
  std::optional<BergeEmbedding> long_cycle;
  /// Checked on equality only.
  bool block_structure = false;
  std::string detail;
};

/// If H has no Berge cycle of length >= k, checks |H| <= C_r(k)(n-1) and,
/// on equality, the block structure of the 2-shadow.
inline CycleBoundVerdict verify_theorem6(const Hypergraph& h, int k, const BergeLimits& lim = {}) {
  const int n = h.order(), r = h.uniformity();
  if (r < 3 || k < r + 3 || n < k) throw ParameterError("verify_theorem6 needs r >= 3 and n >= k >= r+3");
  CycleBoundVerdict v;
  v.edges = std::int64_t(h.size());
  v.bound = cycle_bound(n, k, r);
  if (auto cyc = find_berge_cycle_at_least(h, k, lim)) {
    v.long_cycle = std::move(cyc);
    v.detail = "Berge cycle of length " + std::to_string(v.long_cycle->length()) + " found";
    return v;
  }
  const Rational e(v.edges);
  if (e > v.bound) {
    v.status = BoundStatus::Violation;
    v.detail = "edge count exceeds the bound";
  } else if (e == v.bound) {
    v.block_structure = has_extremal_block_structure(h, k);
    v.status = v.block_structure ? BoundStatus::Equality : BoundStatus::Violation;
    v.detail = v.block_structure ? "equality; every shadow block is a complete (k-1)-clique"
                                 : "equality without the block structure";
  } else {
    v.status = BoundStatus::Strict;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Path bounds
// ---------------------------------------------------------------------------

enum class PathBoundMode { Auto, Connected, Component };

struct PathBoundVerdict {
  BoundStatus status = BoundStatus::NotApplicable;
  int longest_path = 0;
  std::int64_t edges = 0;
  /// True when the bound was evaluated against the edge count.
  bool connected_bound_applied = false;
  Rational connected_bound;
  bool component_bound_applied = false;
  Rational component_bound;
  /// Set on equality with the component bound: every component is K_k^(r).
  bool components_complete = false;
  std::string detail;
};

/// For H without a Berge path of length k (k >= r+3): the connected bound
/// |H| <= C_r(k)(n-1) (connected H, n >= k+1) and the component bound
/// |H| <= (n/k) C(k,r) (n >= k), equality only for disjoint copies of K_k^(r).
inline PathBoundVerdict check_path_bounds(const Hypergraph& h, int k, PathBoundMode mode = PathBoundMode::Auto,
                                          const BergeLimits& lim = {}) {
  const int n = h.order(), r = h.uniformity();
  if (r < 3 || k < r + 3) throw ParameterError("check_path_bounds needs r >= 3 and k >= r+3");
  const bool connected = is_connected(h);
  if (mode == PathBoundMode::Connected) {
    if (!connected) throw InvalidInput("check_path_bounds: connected-hypergraph bound needs a connected hypergraph");
    if (n < k + 1) throw ParameterError("check_path_bounds: connected-hypergraph bound needs n >= k+1");
  }
  if (mode == PathBoundMode::Component && n < k) throw ParameterError("check_path_bounds: component bound needs n >= k");

  PathBoundVerdict v;
  v.edges = std::int64_t(h.size());
  v.connected_bound_applied = mode != PathBoundMode::Component && connected && n >= k + 1;
  v.component_bound_applied = mode != PathBoundMode::Connected && n >= k;
  if (!v.connected_bound_applied && !v.component_bound_applied) {
    v.detail = "no bound applies at these parameters";
    return v;
  }
  const BergeResult path = longest_berge_path(h, lim);
  v.longest_path = path.length;
  if (path.length >= k) {
    // The hypothesis fails, so neither bound is evaluated.
    v.connected_bound_applied = v.component_bound_applied = false;
    v.detail = "Berge path of length " + std::to_string(path.length) + " found";
    return v;
  }
  const Rational e(v.edges);
  bool violated = false, equal = false;
  if (v.connected_bound_applied) {
    v.connected_bound = cycle_bound(n, k, r);
    violated = violated || e > v.connected_bound;
    equal = equal || e == v.connected_bound;
  }
  if (v.component_bound_applied) {
    v.component_bound = Rational(n, k) * Rational(binomial(k, r));
    violated = violated || e > v.component_bound;
    if (e == v.component_bound) {
      equal = true;
      v.components_complete = true;
      for (VertexSet c : components(shadow_graph(h)))
        if (c.size() != k || std::int64_t(h.edges_within(c).size()) != binomial(k, r)) v.components_complete = false;
      if (!v.components_complete) violated = true;
    }
  }
  v.status = violated ? BoundStatus::Violation : (equal ? BoundStatus::Equality : BoundStatus::Strict);
  return v;
}

struct PathRegimeVerdict {
  BoundStatus status = BoundStatus::NotApplicable;
  /// "long" (k >= r+2 >= 5), "short" (r >= k >= 3) or "gap" (k = r+1).
  std::string regime;
  int longest_path = 0;
  std::int64_t edges = 0;
  Rational bound;
  std::string detail;
};

/// Path bounds for H without a Berge path of length k: (n/k) C(k,r) when
/// k >= r+2 >= 5, and n(k-1)/(r+1) when r >= k >= 3. k = r+1 is not covered.
inline PathRegimeVerdict verify_gkl_path_bound(const Hypergraph& h, int k, const BergeLimits& lim = {}) {
  const int n = h.order(), r = h.uniformity();
  PathRegimeVerdict v;
  v.edges = std::int64_t(h.size());
  if (k == r + 1) {
    v.regime = "gap";
    v.detail = "k = r+1 is outside both regimes";
    return v;
  }
  if (k >= r + 2 && r + 2 >= 5) {
    v.regime = "long";
    v.bound = Rational(n, k) * Rational(binomial(k, r));
  } else if (r >= k && k >= 3) {
    v.regime = "short";
    v.bound = Rational(std::int64_t(n) * (k - 1), r + 1);
  } else {
    throw ParameterError("verify_gkl_path_bound: (k, r) lies in neither regime");
  }
  const BergeResult path = longest_berge_path(h, lim);
  v.longest_path = path.length;
  if (path.length >= k) {
    v.detail = "Berge path of length " + std::to_string(path.length) + " found";
    return v;
  }
  const Rational e(v.edges);
  v.status = e > v.bound ? BoundStatus::Violation : (e == v.bound ? BoundStatus::Equality : BoundStatus::Strict);
  return v;
}

// ---------------------------------------------------------------------------
// Exhaustive extremal search
// ---------------------------------------------------------------------------

enum class SearchMode {
  /// k >= r+3; exceeding the bound is a violation.
  Checked,
  /// k = r+2, where the bound is open; it is compared and reported only.
  Probe,
};

inline const char* to_string(SearchMode m) { return m == SearchMode::Checked ? "checked" : "probe"; }

struct BoundParams {
  int n = 0;
  int r = 0;
  int k = 0;
  SearchMode mode = SearchMode::Checked;

  int t() const { return (k - 1) / 2; }
};

struct SearchBudget {
  BergeLimits detector{12, 64};
  EnumerationLimits enumeration;
};

struct SearchReport {
  BoundParams params;
  std::int64_t max_edges_found = 0;
  Hypergraph witness{1, 2};
  bool exhaustive = true;
  std::size_t classes_visited = 0;
  std::chrono::milliseconds elapsed{0};
  /// C_r(k)(n-1).
  Rational bound;
  /// max_edges_found <= floor(bound).
  bool within_bound = true;
};

/// Maximum number of edges of an r-graph on [n] without a Berge cycle of
/// length >= k, by isomorph-free enumeration of the cycle-free classes
/// (having such a cycle is preserved by adding edges, so the cycle-free
/// classes are closed under edge deletion).
inline SearchReport search_max_edges(const BoundParams& params, const SearchBudget& budget = {}) {
  const auto started = std::chrono::steady_clock::now();
  if (params.n < 1 || params.r < 2) throw ParameterError("search_max_edges needs n >= 1, r >= 2");
  if (params.mode == SearchMode::Checked && params.k < params.r + 3)
    throw ParameterError("checked mode needs k >= r+3");
  if (params.mode == SearchMode::Probe && params.k != params.r + 2)
    throw ParameterError("probe mode needs k = r+2");
  if (params.n > budget.enumeration.max_vertices)
    throw BudgetError("search_max_edges: n = " + std::to_string(params.n) + " exceeds the enumeration budget");

  const int k = params.k;
  const BergeLimits lim = budget.detector;
  auto result = enumerate_classes(
      params.n, params.r, [&](const Hypergraph& h) { return !has_berge_cycle_geq(h, k, lim); }, budget.enumeration);

  SearchReport rep;
  rep.params = params;
  rep.exhaustive = result.exhaustive;
  rep.classes_visited = result.classes_visited;
  rep.witness = Hypergraph(params.n, params.r);
  if (!result.levels.empty()) {
    const auto& top = result.levels.back();
    rep.witness = top.front().representative;
    rep.max_edges_found = std::int64_t(rep.witness.size());
  }
  rep.bound = cycle_bound(params.n, params.k, params.r);
  rep.within_bound = rep.max_edges_found <= floor(rep.bound);
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  return rep;
}

}  // namespace berge
