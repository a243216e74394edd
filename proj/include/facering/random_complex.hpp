#pragma once

#include <random>

#include "facering/complex.hpp"

namespace facering {

struct RandomComplexOptions {
  int vertices = 6;
  int max_generators = 4;
  int min_size = 2;
  int max_size = 4;
  bool pairwise_intersecting = false;
};

/// Complex on "1".."n" whose minimal nonfaces are up to `max_generators`
/// random sets, drawn with rejection of comparable (or, if requested,
/// disjoint) pairs. Only `rng() % k` is used, so the stream is portable.
SimplicialComplex random_complex(std::mt19937_64& rng, const RandomComplexOptions& options);

}  // namespace facering
