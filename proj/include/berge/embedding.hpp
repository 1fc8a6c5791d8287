#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

enum class PatternKind { Path, Cycle, General };

inline const char* to_string(PatternKind k) {
  switch (k) {
    case PatternKind::Path: return "path";
    case PatternKind::Cycle: return "cycle";
    default: return "general";
  }
}

/// A copy of a pattern graph F on concrete base vertices: pattern edge i
/// joins base[pattern[i].first] and base[pattern[i].second].
struct PatternCopy {
  PatternKind kind = PatternKind::General;
  std::vector<Vertex> base;
  std::vector<std::pair<int, int>> pattern;

  static PatternCopy cycle(std::vector<Vertex> vs) {
    PatternCopy c{PatternKind::Cycle, std::move(vs), {}};
    const int l = int(c.base.size());
    for (int i = 0; i < l; ++i) c.pattern.emplace_back(i, (i + 1) % l);
    return c;
  }
  static PatternCopy path(std::vector<Vertex> vs) {
    PatternCopy c{PatternKind::Path, std::move(vs), {}};
    for (int i = 0; i + 1 < int(c.base.size()); ++i) c.pattern.emplace_back(i, i + 1);
    return c;
  }

  ShadowPair edge(std::size_t i) const { return {base[pattern[i].first], base[pattern[i].second]}; }
};

/// Witness of a Berge copy: distinct base vertices and distinct hyperedges,
/// hyperedges[i] containing both ends of pattern edge i.
struct BergeEmbedding {
  PatternKind kind = PatternKind::General;
  std::vector<Vertex> base;
  std::vector<VertexSet> hyperedges;
  std::vector<std::pair<int, int>> pattern;

  static BergeEmbedding cycle(std::vector<Vertex> base, std::vector<VertexSet> edges) {
    auto c = PatternCopy::cycle(std::move(base));
    return {c.kind, std::move(c.base), std::move(edges), std::move(c.pattern)};
  }
  static BergeEmbedding path(std::vector<Vertex> base, std::vector<VertexSet> edges) {
    auto c = PatternCopy::path(std::move(base));
    return {c.kind, std::move(c.base), std::move(edges), std::move(c.pattern)};
  }

  /// Cycle: number of base vertices. Path: number of hyperedges.
  int length() const { return kind == PatternKind::Cycle ? int(base.size()) : int(hyperedges.size()); }

  VertexSet base_set() const { return VertexSet::of(base); }
};

/// Checks every invariant of `emb` against `h`; on failure stores the reason in `why`.
inline bool is_valid_embedding(const Hypergraph& h, const BergeEmbedding& emb, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  VertexSet seen;
  for (Vertex v : emb.base) {
    if (v < 1 || v > h.order()) return fail("base vertex outside [1, n]");
    if (seen.contains(v)) return fail("repeated base vertex " + std::to_string(v));
    seen.insert(v);
  }
  if (emb.hyperedges.size() != emb.pattern.size()) return fail("hyperedge count differs from pattern edge count");
  auto sorted = emb.hyperedges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return fail("repeated hyperedge");
  for (std::size_t i = 0; i < emb.pattern.size(); ++i) {
    const auto [a, b] = emb.pattern[i];
    if (a < 0 || b < 0 || a >= int(emb.base.size()) || b >= int(emb.base.size()) || a == b)
      return fail("malformed pattern edge");
    if (!h.contains(emb.hyperedges[i])) return fail("hyperedge " + emb.hyperedges[i].to_string() + " not in H");
    if (!emb.hyperedges[i].contains(VertexSet{emb.base[a], emb.base[b]}))
      return fail("hyperedge " + emb.hyperedges[i].to_string() + " misses its pair");
  }
  const int l = int(emb.base.size());
  if (emb.kind == PatternKind::Cycle) {
    if (l < 2) return fail("cycle needs at least two base vertices");
    if (int(emb.pattern.size()) != l) return fail("cycle needs as many edges as base vertices");
    for (int i = 0; i < l; ++i)
      if (emb.pattern[i] != std::pair<int, int>(i, (i + 1) % l)) return fail("cycle pattern is not consecutive");
  } else if (emb.kind == PatternKind::Path) {
    if (l < 1 || int(emb.pattern.size()) != l - 1) return fail("path needs one more base vertex than edges");
    for (int i = 0; i + 1 < l; ++i)
      if (emb.pattern[i] != std::pair<int, int>(i, i + 1)) return fail("path pattern is not consecutive");
  }
  return true;
}

}  // namespace berge
