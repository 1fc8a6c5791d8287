#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "berge/canonical.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

struct EnumerationLimits {
  /// Stop (non-exhaustively) after this many kept classes.
  std::size_t max_classes = std::numeric_limits<std::size_t>::max();
  /// Wall-clock limit; zero means none.
  std::chrono::milliseconds time_limit{0};
  /// Worker threads used to extend one level.
  int jobs = 1;
  int max_vertices = kCanonicalMaxVertices;
};

/// Isomorphism classes of r-graphs on [n] with a property closed under
/// deleting edges, grouped by edge count.
struct ClassEnumeration {
  /// levels[m] holds canonical representatives with m edges, sorted by label.
  std::vector<std::vector<CanonicalForm>> levels;
  bool exhaustive = true;
  std::size_t classes_visited = 0;
};

/// Enumerates, up to isomorphism, every r-graph on [n] satisfying `keep`.
/// `keep` must be closed under edge deletion (every kept graph minus an edge is
/// kept); level m+1 is then obtained from the level-m representatives by adding
/// each missing r-set and deduplicating by canonical label, which reaches every
/// class. `keep` may be called concurrently when jobs > 1.
inline ClassEnumeration enumerate_classes(int n, int r, const std::function<bool(const Hypergraph&)>& keep,
                                          const EnumerationLimits& limits = {}) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  auto out_of_time = [&] {
    return limits.time_limit.count() > 0 && Clock::now() - started > limits.time_limit;
  };

  std::vector<VertexSet> all_rsets;
  for_each_subset_of_size(VertexSet::range(1, n), r, [&](VertexSet s) { all_rsets.push_back(s); });

  ClassEnumeration out;
  const Hypergraph empty(n, r);
  if (!keep(empty)) return out;
  out.levels.push_back({canonical_form(empty, limits.max_vertices)});
  out.classes_visited = 1;

  // label -> representative, or nullopt when the class failed `keep`.
  using Found = std::map<std::string, std::optional<CanonicalForm>>;
  auto extend = [&](const std::vector<CanonicalForm>& reps, std::size_t lo, std::size_t hi, Found& found) {
    for (std::size_t i = lo; i < hi; ++i) {
      const Hypergraph& base = reps[i].representative;
      for (VertexSet e : all_rsets) {
        if (base.contains(e)) continue;
        CanonicalForm cf = canonical_form(base.with_edge(e), limits.max_vertices);
        if (found.count(cf.label)) continue;
        const bool ok = keep(cf.representative);
        std::string label = cf.label;
        found.emplace(std::move(label), ok ? std::optional<CanonicalForm>(std::move(cf)) : std::nullopt);
      }
    }
  };

  while (!out.levels.back().empty()) {
    const auto& reps = out.levels.back();
    if (reps.front().representative.size() == all_rsets.size()) break;
    if (out_of_time()) {
      out.exhaustive = false;
      break;
    }
    const int jobs = std::max(1, std::min<int>(limits.jobs, int(reps.size())));
    std::vector<Found> partial(static_cast<std::size_t>(jobs));
    if (jobs == 1) {
      extend(reps, 0, reps.size(), partial[0]);
    } else {
      std::vector<std::thread> workers;
      for (int j = 0; j < jobs; ++j) {
        const std::size_t lo = reps.size() * std::size_t(j) / std::size_t(jobs);
        const std::size_t hi = reps.size() * std::size_t(j + 1) / std::size_t(jobs);
        workers.emplace_back([&, lo, hi, j] { extend(reps, lo, hi, partial[std::size_t(j)]); });
      }
      for (auto& w : workers) w.join();
    }
    Found merged;
    for (auto& part : partial) merged.merge(part);
    std::vector<CanonicalForm> next;
    for (auto& [label, rep] : merged)
      if (rep) next.push_back(std::move(*rep));
    out.classes_visited += next.size();
    if (next.empty()) break;
    out.levels.push_back(std::move(next));
    if (out.classes_visited > limits.max_classes) {
      out.exhaustive = false;
      break;
    }
  }
  return out;
}

/// Every isomorphism class of r-graphs on [n].
inline ClassEnumeration enumerate_all_classes(int n, int r, const EnumerationLimits& limits = {}) {
  return enumerate_classes(n, r, [](const Hypergraph&) { return true; }, limits);
}

}  // namespace berge
