#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace berge {

/// Maximum bipartite matching grown one left vertex at a time by augmenting
/// paths (Kuhn). Left vertices are added in order; right vertices are
/// 0..right_count-1. Deterministic: neighbours are tried in the given order.
class IncrementalMatching {
 public:
  explicit IncrementalMatching(std::size_t right_count) : right_match_(right_count, -1), stamp_(right_count, 0) {}

  std::size_t left_count() const { return adj_.size(); }
  std::size_t right_count() const { return right_match_.size(); }
  const std::vector<int>& neighbours(int left) const { return adj_[left]; }

  /// Matched right vertex of `left`, or -1.
  int match_of_left(int left) const { return left_match_[left]; }
  /// Matched left vertex of `right`, or -1.
  int match_of_right(int right) const { return right_match_[right]; }

  /// Appends a left vertex and tries to match it. Returns true on success;
  /// on failure the vertex stays in the graph unmatched and the existing
  /// matching is unchanged.
  bool add_left(std::vector<int> neighbours) {
    adj_.push_back(std::move(neighbours));
    left_match_.push_back(-1);
    return augment(int(adj_.size()) - 1);
  }

  /// Removes the most recently added left vertex. Only valid when the caller
  /// restores a snapshot taken before the matching add_left that created it.
  struct Snapshot {
    std::vector<int> left_match;
    std::vector<int> right_match;
  };
  Snapshot snapshot() const { return {left_match_, right_match_}; }
  void pop_left(const Snapshot& s) {
    adj_.pop_back();
    left_match_ = s.left_match;
    right_match_ = s.right_match;
  }

  /// Left and right vertices reachable from `root` by alternating paths
  /// (non-matching edge left->right, matching edge right->left). When `root`
  /// is unmatched in a maximum matching every reached right vertex is matched,
  /// so the reached left set minus root is matched onto the reached right set.
  std::pair<std::vector<int>, std::vector<int>> alternating_reach(int root) const {
    std::vector<char> seen_left(adj_.size(), 0), seen_right(right_match_.size(), 0);
    std::vector<int> lefts{root}, rights;
    seen_left[root] = 1;
    for (std::size_t head = 0; head < lefts.size(); ++head) {
      for (int r : adj_[lefts[head]]) {
        if (seen_right[r]) continue;
        seen_right[r] = 1;
        rights.push_back(r);
        const int l = right_match_[r];
        if (l >= 0 && !seen_left[l]) {
          seen_left[l] = 1;
          lefts.push_back(l);
        }
      }
    }
    return {std::move(lefts), std::move(rights)};
  }

 private:
  bool augment(int left) {
    ++epoch_;
    return try_kuhn(left);
  }

  bool try_kuhn(int left) {
    for (int r : adj_[left]) {
      if (stamp_[r] == epoch_) continue;
      stamp_[r] = epoch_;
      if (right_match_[r] < 0 || try_kuhn(right_match_[r])) {
        right_match_[r] = left;
        left_match_[left] = r;
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<int> left_match_;
  std::vector<int> right_match_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
};

}  // namespace berge
