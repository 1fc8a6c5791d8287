#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "berge/error.hpp"

namespace berge {

/// 1-based vertex id.
using Vertex = int;

/// Widest vertex set representable by a VertexSet.
inline constexpr int kMaxVertices = 64;

/// A set of vertices from [1, 64], stored as a bitmask (vertex v is bit v-1).
///
/// Ordering is lexicographic on the sorted vertex lists, which is the order
/// every writer in this library uses for edges.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }
  template <class Range>
  static VertexSet of(const Range& vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }
  static constexpr VertexSet range(int first, int last) {
    VertexSet s;
    for (int v = first; v <= last; ++v) s.bits_ |= bit(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Vertex v) const { return (bits_ & bit(v)) != 0; }
  constexpr bool contains(VertexSet o) const { return (bits_ & o.bits_) == o.bits_; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  void insert(Vertex v) {
    if (v < 1 || v > kMaxVertices) throw BudgetError("vertex id outside [1, 64]: " + std::to_string(v));
    bits_ |= bit(v);
  }
  constexpr void erase(Vertex v) { bits_ &= ~bit(v); }

  /// Smallest element; undefined on the empty set.
  constexpr Vertex min() const { return std::countr_zero(bits_) + 1; }
  /// Largest element; undefined on the empty set.
  constexpr Vertex max() const { return 64 - std::countl_zero(bits_); }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) f(Vertex(std::countr_zero(b) + 1));
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

  /// Lexicographic order of the sorted vertex lists.
  friend constexpr bool operator<(VertexSet a, VertexSet b) {
    const std::uint64_t diff = a.bits_ ^ b.bits_;
    if (diff == 0) return false;
    const std::uint64_t low = diff & (~diff + 1);
    const std::uint64_t above = ~((low << 1) - 1);
    if (a.bits_ & low) {
      // a continues with `low`; b either continues with something larger or stops.
      return (b.bits_ & above) != 0;
    }
    return (a.bits_ & above) == 0;
  }
  friend constexpr bool operator>(VertexSet a, VertexSet b) { return b < a; }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](Vertex v) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

 private:
  static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }
  std::uint64_t bits_ = 0;
};

/// An unordered vertex pair {u, v}, stored with u < v.
struct ShadowPair {
  Vertex u = 0;
  Vertex v = 0;

  ShadowPair() = default;
  ShadowPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw InvalidInput("shadow pair needs two distinct vertices");
  }
  VertexSet as_set() const { return VertexSet{u, v}; }

  friend auto operator<=>(const ShadowPair&, const ShadowPair&) = default;
};

}  // namespace berge
