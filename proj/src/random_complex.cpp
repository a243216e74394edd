#include "facering/random_complex.hpp"

#include <algorithm>

#include "facering/errors.hpp"

namespace facering {

SimplicialComplex random_complex(std::mt19937_64& rng, const RandomComplexOptions& o) {
  if (o.vertices < 1 || o.vertices > kMaxScanVertices || o.min_size < 2 || o.max_size < o.min_size) {
    throw InvalidInput("random_complex: bad options");
  }
  const int n = o.vertices;
  const int top = std::min(o.max_size, n);
  std::vector<VertexMask> gens;
  if (top >= o.min_size && o.max_generators > 0) {
    const auto target = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(o.max_generators) + 1);
    for (int attempt = 0; attempt < 200 && gens.size() < target; ++attempt) {
      const int size = o.min_size + static_cast<int>(rng() % static_cast<std::uint64_t>(top - o.min_size + 1));
      VertexMask m = 0;
      while (cardinality(m) < size) m |= bit(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
      const bool ok = std::all_of(gens.begin(), gens.end(), [&](VertexMask g) {
        if (is_subset(g, m) || is_subset(m, g)) return false;
        return !o.pairwise_intersecting || (g & m) != 0;
      });
      if (ok) gens.push_back(m);
    }
  }
  return SimplicialComplex::from_minimal_nonfaces(numbered_labels(n), gens);
}

}  // namespace facering
