#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "berge/error.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

/// Result of canonical labeling.
struct CanonicalForm {
  /// Equal for two hypergraphs iff they are isomorphic.
  std::string label;
  /// The canonically relabeled hypergraph (isomorphic to the input).
  Hypergraph representative;
  /// labeling[v] is the canonical name of input vertex v (index 0 unused).
  std::vector<Vertex> labeling;
};

namespace detail {

// Individualization-refinement search for a canonical relabeling. Colors are
// ranks of an ordered partition; every step is label-invariant, so the best
// leaf is an isomorphism invariant.
class Canonizer {
 public:
  explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.order()), incident_(std::size_t(n_) + 1) {
    for (std::size_t i = 0; i < h.edges().size(); ++i)
      h.edges()[i].for_each([&](Vertex v) { incident_[v].push_back(int(i)); });
    compute_twins();
  }

  CanonicalForm run() {
    std::vector<int> colors(std::size_t(n_) + 1, 0);
    search(colors);
    std::vector<Vertex> labeling(std::size_t(n_) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) labeling[v] = best_colors_[v] + 1;
    Hypergraph rep = h_.relabeled(labeling);
    std::string label = std::to_string(n_) + "," + std::to_string(h_.uniformity()) + ":";
    char buf[24];
    for (std::size_t i = 0; i < best_.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%s%llx", i ? "." : "", static_cast<unsigned long long>(best_[i]));
      label += buf;
    }
    return {std::move(label), std::move(rep), std::move(labeling)};
  }

 private:
  static int count_distinct(const std::vector<int>& colors) {
    return 1 + *std::max_element(colors.begin() + 1, colors.end());
  }

  void refine(std::vector<int>& colors) const {
    int cells = count_distinct(colors);
    std::vector<std::vector<int>> sig(std::size_t(n_) + 1);
    std::vector<std::vector<int>> blocks;
    while (true) {
      for (Vertex v = 1; v <= n_; ++v) {
        blocks.clear();
        for (int ei : incident_[v]) {
          std::vector<int> b;
          (h_.edges()[ei] - VertexSet{v}).for_each([&](Vertex u) { b.push_back(colors[u]); });
          std::sort(b.begin(), b.end());
          blocks.push_back(std::move(b));
        }
        std::sort(blocks.begin(), blocks.end());
        auto& s = sig[v];
        s.assign(1, colors[v]);
        for (const auto& b : blocks) s.insert(s.end(), b.begin(), b.end());
      }
      std::vector<std::vector<int>> sorted(sig.begin() + 1, sig.end());
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (Vertex v = 1; v <= n_; ++v)
        colors[v] = int(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
      if (int(sorted.size()) == cells) return;
      cells = int(sorted.size());
    }
  }

  void compute_twins() {
    twin_rep_.assign(std::size_t(n_) + 1, 0);
    for (Vertex v = 1; v <= n_; ++v) twin_rep_[v] = v;
    for (Vertex u = 1; u <= n_; ++u) {
      if (twin_rep_[u] != u) continue;
      for (Vertex v = u + 1; v <= n_; ++v)
        if (twin_rep_[v] == v && swap_is_automorphism(u, v)) twin_rep_[v] = u;
    }
  }

  bool swap_is_automorphism(Vertex u, Vertex v) const {
    for (VertexSet e : h_.edges()) {
      const bool hu = e.contains(u), hv = e.contains(v);
      if (hu == hv) continue;
      VertexSet img = e;
      img.erase(hu ? u : v);
      img.insert(hu ? v : u);
      if (!h_.contains(img)) return false;
    }
    return true;
  }

  void search(std::vector<int> colors) {
    refine(colors);
    const int cells = count_distinct(colors);
    if (cells == n_) {
      leaf(colors);
      return;
    }
    // First non-singleton cell in color order.
    std::vector<int> cell_size(static_cast<std::size_t>(cells), 0);
    for (Vertex v = 1; v <= n_; ++v) ++cell_size[colors[v]];
    int target = 0;
    while (cell_size[target] == 1) ++target;

    std::vector<Vertex> tried_twins;
    for (Vertex v = 1; v <= n_; ++v) {
      if (colors[v] != target) continue;
      if (std::find(tried_twins.begin(), tried_twins.end(), twin_rep_[v]) != tried_twins.end()) continue;
      tried_twins.push_back(twin_rep_[v]);
      std::vector<int> next(colors.size(), 0);
      for (Vertex u = 1; u <= n_; ++u) next[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
      // Re-rank to consecutive colors.
      std::vector<int> used(next.begin() + 1, next.end());
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      for (Vertex u = 1; u <= n_; ++u) next[u] = int(std::lower_bound(used.begin(), used.end(), next[u]) - used.begin());
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<std::uint64_t> cert;
    cert.reserve(h_.size());
    for (VertexSet e : h_.edges()) {
      std::uint64_t m = 0;
      e.for_each([&](Vertex v) { m |= std::uint64_t{1} << colors[v]; });
      cert.push_back(m);
    }
    std::sort(cert.begin(), cert.end());
    if (!have_best_ || cert < best_) {
      best_ = std::move(cert);
      best_colors_ = colors;
      have_best_ = true;
    }
  }

  const Hypergraph& h_;
  int n_;
  std::vector<std::vector<int>> incident_;
  std::vector<Vertex> twin_rep_;
  bool have_best_ = false;
  std::vector<std::uint64_t> best_;
  std::vector<int> best_colors_;
};

}  // namespace detail

/// Default vertex budget for canonical labeling.
inline constexpr int kCanonicalMaxVertices = 12;

/// Canonical relabeling of `h`: isomorphic inputs get identical labels.
inline CanonicalForm canonical_form(const Hypergraph& h, int max_vertices = kCanonicalMaxVertices) {
  if (h.order() > max_vertices)
    throw BudgetError("canonical_form: n = " + std::to_string(h.order()) + " exceeds budget " +
                      std::to_string(max_vertices));
  return detail::Canonizer(h).run();
}

inline std::string canonical_label(const Hypergraph& h, int max_vertices = kCanonicalMaxVertices) {
  return canonical_form(h, max_vertices).label;
}

}  // namespace berge
