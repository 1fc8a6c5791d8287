#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "berge/embedding.hpp"
#include "berge/error.hpp"
#include "berge/hypergraph.hpp"
#include "berge/matching.hpp"

namespace berge {

/// One representative pair together with the hyperedge it is assigned to.
struct SdrpEntry {
  ShadowPair pair;
  VertexSet edge;

  friend bool operator==(const SdrpEntry&, const SdrpEntry&) = default;
};

/// System of distinct representative pairs of `host`: distinct pairs, each
/// assigned injectively to a containing hyperedge, and no pair lies in an
/// unassigned hyperedge. Entries are sorted by pair.
struct Sdrp {
  Hypergraph host;
  std::vector<SdrpEntry> entries;

  std::size_t size() const { return entries.size(); }

  std::vector<ShadowPair> pairs() const {
    std::vector<ShadowPair> out;
    for (const auto& e : entries) out.push_back(e.pair);
    return out;
  }
  std::vector<VertexSet> assigned() const {
    std::vector<VertexSet> out;
    for (const auto& e : entries) out.push_back(e.edge);
    return out;
  }
  /// Hyperedge assigned to `p`, if `p` is one of the pairs.
  std::optional<VertexSet> edge_for(ShadowPair p) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), p,
                               [](const SdrpEntry& e, ShadowPair q) { return e.pair < q; });
    if (it != entries.end() && it->pair == p) return it->edge;
    return std::nullopt;
  }
};

/// The hyperedges left after removing an SDRP's assigned edges, their 2-shadow,
/// and for every shadow pair the residual hyperedges that contain it.
struct ResidualPartition {
  Hypergraph host;
  std::vector<VertexSet> residual_edges;
  std::vector<ShadowPair> residual_shadow;
  /// incidence[i] lists indices into residual_edges containing residual_shadow[i].
  std::vector<std::vector<int>> incidence;

  int shadow_index(ShadowPair p) const {
    auto it = std::lower_bound(residual_shadow.begin(), residual_shadow.end(), p);
    return (it != residual_shadow.end() && *it == p) ? int(it - residual_shadow.begin()) : -1;
  }
};

/// Builds the residual partition for the given residual edge family of `host`.
inline ResidualPartition make_residual(const Hypergraph& host, std::vector<VertexSet> residual_edges) {
  std::sort(residual_edges.begin(), residual_edges.end());
  for (VertexSet e : residual_edges)
    if (!host.contains(e)) throw InvalidInput("residual edge " + e.to_string() + " is not an edge of the host");
  ResidualPartition part{host, std::move(residual_edges), {}, {}};
  for (VertexSet e : part.residual_edges) {
    const auto vs = e.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) part.residual_shadow.emplace_back(vs[i], vs[j]);
  }
  std::sort(part.residual_shadow.begin(), part.residual_shadow.end());
  part.residual_shadow.erase(std::unique(part.residual_shadow.begin(), part.residual_shadow.end()),
                             part.residual_shadow.end());
  part.incidence.resize(part.residual_shadow.size());
  for (std::size_t i = 0; i < part.residual_shadow.size(); ++i)
    for (std::size_t j = 0; j < part.residual_edges.size(); ++j)
      if (part.residual_edges[j].contains(part.residual_shadow[i].as_set())) part.incidence[i].push_back(int(j));
  return part;
}

/// Residual partition of an SDRP: everything not assigned.
inline ResidualPartition residual_of(const Sdrp& s) {
  std::vector<VertexSet> rest;
  const auto used = [&] {
    auto a = s.assigned();
    std::sort(a.begin(), a.end());
    return a;
  }();
  for (VertexSet e : s.host.edges())
    if (!std::binary_search(used.begin(), used.end(), e)) rest.push_back(e);
  return make_residual(s.host, std::move(rest));
}

/// Checks the SDRP invariants; on failure stores the reason in `why`.
inline bool is_valid_sdrp(const Sdrp& s, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  auto pairs = s.pairs();
  auto edges = s.assigned();
  std::sort(pairs.begin(), pairs.end());
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return fail("repeated pair");
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return fail("repeated assigned hyperedge");
  for (const auto& e : s.entries) {
    if (!s.host.contains(e.edge)) return fail("assigned edge " + e.edge.to_string() + " not in host");
    if (!e.edge.contains(e.pair.as_set())) return fail("assigned edge " + e.edge.to_string() + " misses its pair");
  }
  for (VertexSet f : s.host.edges()) {
    if (std::binary_search(edges.begin(), edges.end(), f)) continue;
    for (ShadowPair p : pairs)
      if (f.contains(p.as_set()))
        return fail("pair {" + std::to_string(p.u) + "," + std::to_string(p.v) + "} lies in unassigned edge " +
                    f.to_string());
  }
  return true;
}

/// Outcome of a strict-Hall (positive surplus) test. On failure, `violator` is
/// a nonempty pair set S with |S| >= |B_S|, and `violator_edges` is B_S.
struct SurplusCheck {
  bool holds = true;
  std::vector<ShadowPair> violator;
  std::vector<VertexSet> violator_edges;
};

namespace detail {

// A deficient pair set matched bijectively onto the residual edges containing
// its pairs: pairs[i] is matched to edges[i] (indices into the partition).
struct Deficiency {
  std::vector<int> pairs;
  std::vector<int> edges;
};

inline Deficiency deficiency_from(const IncrementalMatching& m, int root) {
  auto [lefts, rights] = m.alternating_reach(root);
  Deficiency d;
  for (int l : lefts) {
    if (l == root) continue;
    d.pairs.push_back(l);
    d.edges.push_back(m.match_of_left(l));
  }
  return d;
}

// Finds a pair set S with |S| = |B_S| together with a bijection S -> B_S, or
// nothing when every nonempty S has |S| < |B_S|. First tries to match all
// pairs; if that succeeds, tests surplus by cloning one pair at a time.
inline std::optional<Deficiency> find_deficiency(const ResidualPartition& part) {
  const int m = int(part.residual_shadow.size());
  IncrementalMatching matching(part.residual_edges.size());
  for (int i = 0; i < m; ++i)
    if (!matching.add_left(part.incidence[i])) return deficiency_from(matching, i);
  for (int i = 0; i < m; ++i) {
    const auto snap = matching.snapshot();
    if (!matching.add_left(part.incidence[i])) {
      // The clone's twin is reached through its matched edge, so the set is
      // made of distinct original pairs, with |S| = |B_S|.
      return deficiency_from(matching, m);
    }
    matching.pop_left(snap);
  }
  return std::nullopt;
}

inline SurplusCheck to_check(const ResidualPartition& part, const std::vector<int>& pair_idx) {
  SurplusCheck c;
  c.holds = false;
  std::vector<int> edges;
  for (int p : pair_idx) {
    c.violator.push_back(part.residual_shadow[p]);
    edges.insert(edges.end(), part.incidence[p].begin(), part.incidence[p].end());
  }
  std::sort(c.violator.begin(), c.violator.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (int e : edges) c.violator_edges.push_back(part.residual_edges[e]);
  return c;
}

}  // namespace detail

/// Surplus test through bipartite matchings (pairs vs. containing residual edges).
inline SurplusCheck surplus_by_matching(const ResidualPartition& part) {
  auto d = detail::find_deficiency(part);
  if (!d) return {};
  return detail::to_check(part, d->pairs);
}

/// Largest residual shadow for which surplus_by_enumeration is allowed.
inline constexpr std::size_t kSurplusEnumerationLimit = 20;

/// Surplus test by direct enumeration of every nonempty pair subset.
inline SurplusCheck surplus_by_enumeration(const ResidualPartition& part,
                                           std::size_t limit = kSurplusEnumerationLimit) {
  const std::size_t m = part.residual_shadow.size();
  if (m > limit) throw BudgetError("surplus_by_enumeration: " + std::to_string(m) + " pairs exceed the limit");
  const std::size_t words = (part.residual_edges.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> inc(m, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (int e : part.incidence[i]) inc[i][std::size_t(e) / 64] |= std::uint64_t{1} << (e % 64);

  std::vector<int> chosen;
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, std::size_t from, const std::vector<std::uint64_t>& acc) -> void {
    for (std::size_t i = from; i < m && !found; ++i) {
      std::vector<std::uint64_t> next = acc;
      int covered = 0;
      for (std::size_t w = 0; w < words; ++w) {
        next[w] |= inc[i][w];
        covered += std::popcount(next[w]);
      }
      chosen.push_back(int(i));
      if (int(chosen.size()) >= covered) {
        found = chosen;
      } else {
        self(self, i + 1, next);
      }
      chosen.pop_back();
    }
  };
  rec(rec, 0, std::vector<std::uint64_t>(words, 0));
  if (!found) return {};
  return detail::to_check(part, *found);
}

/// Strict-Hall test: true iff every nonempty S of the residual shadow has
/// |S| < |B_S|. Uses matchings, and cross-checks against subset enumeration
/// when the shadow has at most kSurplusEnumerationLimit pairs.
inline SurplusCheck verify_surplus(const ResidualPartition& part) {
  SurplusCheck by_matching = surplus_by_matching(part);
  if (part.residual_shadow.size() <= kSurplusEnumerationLimit) {
    const SurplusCheck by_enum = surplus_by_enumeration(part);
    if (by_enum.holds != by_matching.holds)
      throw ConsistencyError("verify_surplus: matching and subset enumeration disagree");
  }
  if (!by_matching.holds && by_matching.violator.size() < by_matching.violator_edges.size())
    throw ConsistencyError("verify_surplus: extracted violator is not deficient");
  return by_matching;
}

/// An SDRP whose residual satisfies strict Hall, plus that residual.
struct SaturatedSdrp {
  Sdrp sdrp;
  ResidualPartition residual;
  /// Number of deficient sets moved into the SDRP.
  int rounds = 0;
};

/// Grows an SDRP from empty: while the residual shadow has a deficient set S
/// (|S| = |B_S|), matches S bijectively onto B_S and moves those couples into
/// the SDRP. Terminates because every round removes at least one residual edge.
inline SaturatedSdrp saturated_sdrp(const Hypergraph& h) {
  SaturatedSdrp out{Sdrp{h, {}}, make_residual(h, h.edges()), 0};
  while (auto d = detail::find_deficiency(out.residual)) {
    std::vector<VertexSet> moved;
    for (std::size_t i = 0; i < d->pairs.size(); ++i) {
      const VertexSet e = out.residual.residual_edges[d->edges[i]];
      out.sdrp.entries.push_back({out.residual.residual_shadow[d->pairs[i]], e});
      moved.push_back(e);
    }
    if (moved.empty()) throw ConsistencyError("saturated_sdrp: empty deficiency");
    std::sort(moved.begin(), moved.end());
    std::vector<VertexSet> rest;
    for (VertexSet e : out.residual.residual_edges)
      if (!std::binary_search(moved.begin(), moved.end(), e)) rest.push_back(e);
    out.residual = make_residual(h, std::move(rest));
    ++out.rounds;
  }
  std::sort(out.sdrp.entries.begin(), out.sdrp.entries.end(),
            [](const SdrpEntry& a, const SdrpEntry& b) { return a.pair < b.pair; });
  return out;
}

/// The graph on [n] whose edges are the SDRP pairs together with the residual shadow.
inline SimpleGraph auxiliary_graph(const Sdrp& s, const ResidualPartition& part) {
  if (!(s.host == part.host)) throw InvalidInput("auxiliary_graph: SDRP and residual come from different hosts");
  SimpleGraph g(s.host.order());
  for (const auto& e : s.entries) g.add_edge(e.pair.u, e.pair.v);
  for (ShadowPair p : part.residual_shadow)
    if (!g.has_edge(p.u, p.v)) g.add_edge(p.u, p.v);
  return g;
}

/// Realises a copy of a pattern from the auxiliary graph as a Berge copy in
/// the host on the same base vertices. SDRP pairs use their assigned edges;
/// residual-shadow pairs are matched into distinct residual edges.
inline BergeEmbedding lift_to_berge(const PatternCopy& copy, const Sdrp& s, const ResidualPartition& part) {
  if (!(s.host == part.host)) throw InvalidInput("lift_to_berge: SDRP and residual come from different hosts");
  std::vector<ShadowPair> seen;
  for (std::size_t i = 0; i < copy.pattern.size(); ++i) seen.push_back(copy.edge(i));
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidInput("lift_to_berge: pattern copy repeats a pair");
  if (!surplus_by_matching(part).holds) throw InvalidInput("lift_to_berge: residual lacks strict surplus");

  BergeEmbedding emb{copy.kind, copy.base, std::vector<VertexSet>(copy.pattern.size()), copy.pattern};
  IncrementalMatching matching(part.residual_edges.size());
  std::vector<std::size_t> matched_slot;
  for (std::size_t i = 0; i < copy.pattern.size(); ++i) {
    const ShadowPair p = copy.edge(i);
    if (auto e = s.edge_for(p)) {
      emb.hyperedges[i] = *e;
      continue;
    }
    const int idx = part.shadow_index(p);
    if (idx < 0) throw InvalidInput("lift_to_berge: pattern edge is not in the auxiliary graph");
    if (!matching.add_left(part.incidence[idx]))
      throw ConsistencyError("lift_to_berge: no system of distinct residual edges despite strict surplus");
    matched_slot.push_back(i);
  }
  for (std::size_t l = 0; l < matched_slot.size(); ++l)
    emb.hyperedges[matched_slot[l]] = part.residual_edges[matching.match_of_left(int(l))];

  std::string why;
  if (!is_valid_embedding(s.host, emb, &why)) throw ConsistencyError("lift_to_berge: " + why);
  return emb;
}

}  // namespace berge
