#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace wog {

/// Vertices are 0-based indices internally; every JSON surface uses 1-based labels.
using Vertex = std::size_t;

/// Hard limit on ambient vertex count for anything that enumerates subsets.
inline constexpr std::size_t kMaxVertices = 20;

/// A set of vertices in [0, kMaxVertices), stored as a bitmask.
class VertexSet {
public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint32_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet full(std::size_t n) {
    return VertexSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  void insert(Vertex v) {
    if (v >= kMaxVertices) throw std::out_of_range("vertex index exceeds the 20-vertex cap");
    bits_ |= (1u << v);
  }
  constexpr void erase(Vertex v) { bits_ &= ~(1u << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet complement(std::size_t n) const { return full(n) - *this; }

  constexpr bool operator==(const VertexSet&) const = default;

  /// Canonical order: by size, then lexicographically on sorted members.
  friend bool operator<(VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  }

  /// Lowest member; undefined on the empty set.
  constexpr Vertex front() const { return static_cast<Vertex>(std::countr_zero(bits_)); }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Vertex>(std::countr_zero(b)));
    return out;
  }

  /// Members as 1-based labels.
  std::vector<int> labels() const {
    std::vector<int> out;
    for (Vertex v : members()) out.push_back(static_cast<int>(v) + 1);
    return out;
  }

private:
  std::uint32_t bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint32_t>{}(s.bits()); }
};

/// Calls f(sub) for every subset of `s`, including the empty set and `s` itself.
template <class F>
void for_each_subset(VertexSet s, F&& f) {
  const std::uint32_t m = s.bits();
  std::uint32_t sub = m;
  while (true) {
    f(VertexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace wog
