#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facering/check_report.hpp"
#include "facering/complex.hpp"
#include "facering/polynomial.hpp"

namespace facering {

/// c(I): connected components of the graph on `sets` joining two sets
/// when they intersect. Throws InvalidInput on an empty family.
int component_count(std::span<const VertexMask> sets);

/// Simplicial chromatic polynomial by inclusion-exclusion over subsets I
/// of the minimal nonfaces:
///   t^n + sum_{I != ∅} (-1)^|I| t^(n - |σ_I| + c(I)).
/// Refuses more than 25 minimal nonfaces.
IntPolynomial chromatic_polynomial(const SimplicialComplex& s);

/// Number of tuples in {1..q}^n whose coordinates on every minimal
/// nonface are not all equal. Refuses q^n > 10^8.
BigInt finite_model_count(const SimplicialComplex& s, std::uint64_t q);

/// Simple graph on labeled vertices.
class Graph {
 public:
  /// Throws InvalidInput on loops, duplicate edges, or unknown endpoints.
  Graph(LabelSet vertices, std::vector<std::pair<std::string, std::string>> edges);

  const LabelSet& vertices() const { return vertices_; }
  const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

  static Graph complete(int n);

 private:
  LabelSet vertices_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

/// Chromatic polynomial by deletion-contraction. At most 12 vertices.
IntPolynomial graph_chromatic(const Graph& g);
/// The complex whose minimal nonfaces are the edges of `g`.
SimplicialComplex complex_of_graph(const Graph& g);

enum class ContractionConvention { kRemoveOnly, kMergeVertex };
std::string_view to_string(ContractionConvention c);

/// Tidied contraction S/σ. REMOVE_ONLY keeps the faces disjoint from σ.
/// MERGE_VERTEX also adds a fresh vertex v_σ, with τ ∪ {v_σ} a face iff
/// τ ∪ {x} is a face of S for every x in σ.
SimplicialComplex tidied_contraction(const SimplicialComplex& s, VertexMask sigma,
                                     ContractionConvention convention);

/// Residual χ_c(S) - χ_c(S ∪ {σ}) + χ_c(S/σ) for both conventions; the
/// report's verdict is that of `primary`.
CheckReport verify_addition_contraction(
    const SimplicialComplex& s, VertexMask sigma,
    ContractionConvention primary = ContractionConvention::kMergeVertex);

}  // namespace facering
