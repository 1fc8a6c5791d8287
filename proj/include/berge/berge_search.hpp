#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "berge/embedding.hpp"
#include "berge/error.hpp"
#include "berge/graph_structure.hpp"
#include "berge/hypergraph.hpp"
#include "berge/matching.hpp"

namespace berge {

/// Size limits for exact Berge search.
struct BergeLimits {
  int max_vertices = 12;
  std::size_t max_edges = 24;
};

/// Result of a Berge cycle or path search; length 0 means none was found
/// (for paths, a lone vertex).
struct BergeResult {
  int length = 0;
  std::optional<BergeEmbedding> witness;
  bool exhaustive = true;
};

namespace detail {

inline void check_berge_budget(const Hypergraph& h, const BergeLimits& lim) {
  if (h.order() > lim.max_vertices || h.size() > lim.max_edges)
    throw BudgetError("Berge search: n = " + std::to_string(h.order()) + ", |H| = " + std::to_string(h.size()) +
                      " exceeds budget (n <= " + std::to_string(lim.max_vertices) +
                      ", |H| <= " + std::to_string(lim.max_edges) + ")");
}

// DFS over base-vertex sequences in the 2-shadow. An incremental bipartite
// matching (consecutive pairs vs. hyperedges) certifies at every extension
// that the pairs so far have distinct hyperedges. Cycles start at their
// smallest base vertex with the second vertex smaller than the last.
class BergeWalk {
 public:
  BergeWalk(const Hypergraph& h, bool cycles, int floor, int stop_at)
      : h_(h), shadow_(shadow_graph(h)), cycles_(cycles), best_(floor), stop_at_(stop_at),
        pair_edges_(std::size_t(h.order() + 1) * std::size_t(h.order() + 1)) {
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
      const auto vs = h.edges()[i].vertices();
      for (Vertex a : vs)
        for (Vertex b : vs)
          if (a != b) pair_edges_[index(a, b)].push_back(int(i));
    }
  }

  void run() {
    const int n = h_.order();
    const int m = int(h_.size());
    for (Vertex s = 1; s <= n && !done(); ++s) {
      if (best_ >= m) break;
      if (cycles_ && n - s + 1 <= best_) break;
      start_ = s;
      path_.assign(1, s);
      IncrementalMatching matching(h_.size());
      matching_ = &matching;
      if (!cycles_ && best_ < 0) record();
      const VertexSet allowed = cycles_ ? VertexSet::range(s + 1, n) : h_.vertex_set() - VertexSet{s};
      dfs(s, allowed);
    }
    matching_ = nullptr;
  }

  int best() const { return best_; }
  const std::optional<BergeEmbedding>& witness() const { return witness_; }

 private:
  std::size_t index(Vertex a, Vertex b) const { return std::size_t(a) * std::size_t(h_.order() + 1) + std::size_t(b); }
  const std::vector<int>& edges_of(Vertex a, Vertex b) const { return pair_edges_[index(a, b)]; }
  bool done() const { return best_ >= stop_at_; }

  void record() {
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < matching_->left_count(); ++i)
      edges.push_back(h_.edges()[matching_->match_of_left(int(i))]);
    if (cycles_) {
      best_ = int(path_.size());
      witness_ = BergeEmbedding::cycle(path_, std::move(edges));
    } else {
      best_ = int(path_.size()) - 1;
      witness_ = BergeEmbedding::path(path_, std::move(edges));
    }
  }

  void dfs(Vertex v, VertexSet avail) {
    const int depth = int(path_.size());
    if (cycles_) {
      if (depth >= 2 && depth > best_ && (depth == 2 || path_[1] < v) && !edges_of(v, start_).empty()) {
        const auto snap = matching_->snapshot();
        if (matching_->add_left(edges_of(v, start_))) record();
        matching_->pop_left(snap);
      }
    } else if (depth >= 2 && depth - 1 > best_ && path_.front() < v) {
      record();
    }
    if (done()) return;

    const VertexSet r = reach(shadow_, v, avail);
    const int gain = std::min(cycles_ ? depth + r.size() : depth - 1 + r.size(), int(h_.size()));
    if (gain <= best_) return;
    if (cycles_ && !r.intersects(shadow_.neighbours(start_))) return;

    (shadow_.neighbours(v) & avail).for_each([&](Vertex u) {
      if (done()) return;
      const auto snap = matching_->snapshot();
      if (matching_->add_left(edges_of(v, u))) {
        path_.push_back(u);
        dfs(u, avail - VertexSet{u});
        path_.pop_back();
      }
      matching_->pop_left(snap);
    });
  }

  const Hypergraph& h_;
  SimpleGraph shadow_;
  bool cycles_;
  int best_;
  int stop_at_;
  std::vector<std::vector<int>> pair_edges_;
  Vertex start_ = 0;
  std::vector<Vertex> path_;
  IncrementalMatching* matching_ = nullptr;
  std::optional<BergeEmbedding> witness_;
};

inline BergeResult finish(const Hypergraph& h, BergeWalk& w, int length) {
  BergeResult res{length, w.witness(), true};
  if (res.witness) {
    std::string why;
    if (!is_valid_embedding(h, *res.witness, &why)) throw ConsistencyError("Berge search produced a bad witness: " + why);
  }
  return res;
}

}  // namespace detail

/// Exact longest Berge cycle (length >= 2), or 0 when there is none.
inline BergeResult longest_berge_cycle(const Hypergraph& h, const BergeLimits& lim = {}) {
  detail::check_berge_budget(h, lim);
  detail::BergeWalk w(h, true, 1, INT_MAX);
  w.run();
  return detail::finish(h, w, w.best() >= 2 ? w.best() : 0);
}

/// A Berge cycle of length >= k, if one exists; stops at the first witness.
inline std::optional<BergeEmbedding> find_berge_cycle_at_least(const Hypergraph& h, int k,
                                                               const BergeLimits& lim = {}) {
  detail::check_berge_budget(h, lim);
  const int need = std::max(k, 2);
  detail::BergeWalk w(h, true, need - 1, need);
  w.run();
  if (w.best() < need) return std::nullopt;
  return detail::finish(h, w, w.best()).witness;
}

inline bool has_berge_cycle_geq(const Hypergraph& h, int k, const BergeLimits& lim = {}) {
  return find_berge_cycle_at_least(h, k, lim).has_value();
}

/// Exact longest Berge path (number of hyperedges).
inline BergeResult longest_berge_path(const Hypergraph& h, const BergeLimits& lim = {}) {
  detail::check_berge_budget(h, lim);
  detail::BergeWalk w(h, false, -1, INT_MAX);
  w.run();
  return detail::finish(h, w, w.best());
}

/// A Berge path of length >= k, if one exists.
inline std::optional<BergeEmbedding> find_berge_path_at_least(const Hypergraph& h, int k,
                                                              const BergeLimits& lim = {}) {
  detail::check_berge_budget(h, lim);
  if (k <= 0) return BergeEmbedding::path({1}, {});
  detail::BergeWalk w(h, false, k - 1, k);
  w.run();
  if (w.best() < k) return std::nullopt;
  return detail::finish(h, w, w.best()).witness;
}

/// Outcome of testing the cycle-spans-component property on one (H, k).
struct CycleSpanVerdict {
  enum class Status { NotApplicable, Holds, Violation };
  Status status = Status::NotApplicable;
  std::optional<BergeEmbedding> cycle;
  std::string reason;
};

inline const char* to_string(CycleSpanVerdict::Status s) {
  switch (s) {
    case CycleSpanVerdict::Status::NotApplicable: return "not-applicable";
    case CycleSpanVerdict::Status::Holds: return "holds";
    default: return "VIOLATION";
  }
}

/// For connected H without a Berge path of length k: any Berge cycle of
/// length k must have all of V(H) as its base set.
inline CycleSpanVerdict check_lemma7(const Hypergraph& h, int k, const BergeLimits& lim = {}) {
  if (k < 2) throw ParameterError("check_lemma7 needs k >= 2");
  if (!is_connected(h)) throw InvalidInput("check_lemma7: hypergraph is not connected");
  if (find_berge_path_at_least(h, k, lim)) return {CycleSpanVerdict::Status::NotApplicable, std::nullopt, "path of length k"};
  auto cyc = find_berge_cycle_at_least(h, k, lim);
  if (!cyc) return {CycleSpanVerdict::Status::NotApplicable, std::nullopt, "no cycle of length k"};
  if (cyc->length() != k)
    return {CycleSpanVerdict::Status::Violation, cyc, "cycle longer than k without a path of length k"};
  if (cyc->base_set() != h.vertex_set())
    return {CycleSpanVerdict::Status::Violation, cyc, "cycle base set is not the whole component"};
  return {CycleSpanVerdict::Status::Holds, cyc, ""};
}

}  // namespace berge
