#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace facering {

/// Subset of a vertex index range [0, 64) as a bitmask.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
/// Exhaustive 2^n scans are refused above this vertex count.
inline constexpr int kMaxScanVertices = 25;

constexpr VertexMask bit(int i) { return VertexMask{1} << i; }
constexpr int cardinality(VertexMask m) { return std::popcount(m); }
constexpr bool is_subset(VertexMask a, VertexMask b) { return (a & ~b) == 0; }
constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline std::vector<int> indices_of(VertexMask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality(m)));
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

/// Lexicographic order on the ascending index lists of two sets.
constexpr bool lex_less(VertexMask a, VertexMask b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a);
    const int lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

}  // namespace facering
