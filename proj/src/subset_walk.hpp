#pragma once

#include <array>
#include <span>
#include <string>
#include <type_traits>

#include "facering/errors.hpp"
#include "facering/vertex_set.hpp"

namespace facering::detail {

inline constexpr int kMaxWalkGenerators = 25;

inline void check_walk_guard(std::size_t r, int limit = kMaxWalkGenerators) {
  if (r > static_cast<std::size_t>(limit)) {
    throw GuardExceeded("generator count <= " + std::to_string(limit),
                        "2^r enumeration refused for r = " + std::to_string(r) +
                            " generators (limit " + std::to_string(limit) + ")");
  }
}

/// Depth-first walk over all nonempty subsets I of `gens`. Each step adds
/// one generator and updates the union of I and the connected components
/// of its intersection graph (each component kept as the union of its
/// members), so a node costs O(c(I)). The visitor receives
/// (union, component count, |I|).
template <class Visitor>
class SubsetWalk {
 public:
  SubsetWalk(std::span<const VertexMask> gens, Visitor& visit) : gens_(gens), visit_(visit) {}

  void run() { descend(0, 0, VertexMask{0}, 0); }

 private:
  void descend(std::size_t start, int depth, VertexMask uni, int ncomp) {
    auto& here = comps_[static_cast<std::size_t>(depth)];
    auto& next = comps_[static_cast<std::size_t>(depth) + 1];
    for (std::size_t p = start; p < gens_.size(); ++p) {
      const VertexMask g = gens_[p];
      VertexMask merged = g;
      int k = 0;
      for (int c = 0; c < ncomp; ++c) {
        const VertexMask comp = here[static_cast<std::size_t>(c)];
        if (comp & g) merged |= comp;
        else next[static_cast<std::size_t>(k++)] = comp;
      }
      next[static_cast<std::size_t>(k++)] = merged;
      visit_(uni | g, k, depth + 1);
      descend(p + 1, depth + 1, uni | g, k);
    }
  }

  std::span<const VertexMask> gens_;
  Visitor& visit_;
  std::array<std::array<VertexMask, kMaxWalkGenerators>, kMaxWalkGenerators + 1> comps_{};
};

template <class Visitor>
void walk_generator_subsets(std::span<const VertexMask> gens, Visitor&& visit) {
  check_walk_guard(gens.size());
  SubsetWalk<std::remove_reference_t<Visitor>> walk(gens, visit);
  walk.run();
}

}  // namespace facering::detail
