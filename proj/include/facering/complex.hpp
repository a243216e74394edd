#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "facering/bigint.hpp"
#include "facering/vertex_set.hpp"

namespace facering {

using LabelSet = std::vector<std::string>;

/// Antichain of nonempty vertex sets: the generators of a Stanley-Reisner
/// ideal. Stored sorted lexicographically.
class NonfaceFamily {
 public:
  NonfaceFamily() = default;
  /// Throws InvalidInput on an empty generator or a comparable pair.
  explicit NonfaceFamily(std::vector<VertexMask> generators);

  const std::vector<VertexMask>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }
  VertexMask support() const;

  friend bool operator==(const NonfaceFamily&, const NonfaceFamily&) = default;

 private:
  std::vector<VertexMask> generators_;
};

/// Whether singletons must be faces. The relaxed policy is used only for
/// auxiliary complexes, whose generator families may contain singletons.
enum class VertexPolicy { kRequireFaces, kAllowNonfaceVertices };

/// Finite abstract simplicial complex in canonical form: labels sorted
/// lexicographically, facets and minimal nonfaces as sorted index sets.
/// Both descriptions are computed at construction, so values are immutable
/// and cheap to query afterwards.
class SimplicialComplex {
 public:
  /// The complex {∅} on zero vertices.
  SimplicialComplex();

  static SimplicialComplex from_facets(const LabelSet& labels,
                                       const std::vector<LabelSet>& facets);
  /// Facets given as masks over `labels` in the given order.
  static SimplicialComplex from_facets(const LabelSet& labels,
                                       std::span<const VertexMask> facets);

  static SimplicialComplex from_minimal_nonfaces(
      const LabelSet& labels, const std::vector<LabelSet>& generators,
      VertexPolicy policy = VertexPolicy::kRequireFaces);
  /// Generators given as masks over `labels` in the given order.
  static SimplicialComplex from_minimal_nonfaces(
      const LabelSet& labels, std::span<const VertexMask> generators,
      VertexPolicy policy = VertexPolicy::kRequireFaces);

  /// Builds the complex whose faces are the masks (over `labels` in the
  /// given order) accepted by `is_face`. The predicate must be closed
  /// under subsets and accept ∅.
  static SimplicialComplex from_face_predicate(
      const LabelSet& labels, const std::function<bool(VertexMask)>& is_face,
      VertexPolicy policy = VertexPolicy::kRequireFaces);

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const LabelSet& labels() const { return labels_; }
  const std::vector<VertexMask>& facets() const { return facets_; }
  const NonfaceFamily& minimal_nonfaces() const { return nonfaces_; }
  VertexPolicy policy() const { return policy_; }

  /// dim = max facet size - 1; the complex {∅} has dimension -1.
  int dimension() const;
  bool is_face(VertexMask face) const;
  bool is_face(const LabelSet& face) const;

  int index_of(const std::string& label) const;
  VertexMask mask_of(const LabelSet& labels) const;
  LabelSet labels_of(VertexMask mask) const;

  /// All faces with `size` vertices, lexicographically ordered.
  std::vector<VertexMask> faces_of_size(int size) const;
  /// (f_{-1}, f_0, ..., f_{dim}).
  std::vector<BigInt> f_vector() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.labels_ == b.labels_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(LabelSet labels, std::vector<char> face_table, VertexPolicy policy);

  LabelSet labels_;
  std::vector<VertexMask> facets_;
  NonfaceFamily nonfaces_;
  VertexPolicy policy_ = VertexPolicy::kRequireFaces;
};

struct EulerCharacteristics {
  BigInt chi;          // sum over nonempty faces of (-1)^dim
  BigInt reduced_chi;  // chi - 1
};

EulerCharacteristics euler_characteristics(const SimplicialComplex& s);

/// Faces are unions of a face of each side. Labels must be disjoint.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// Faces of size <= k + 1. Requires 0 <= k <= dim.
SimplicialComplex skeleton(const SimplicialComplex& s, int k);
/// S ∪ {σ}: adds `face` (with all its subsets) as a face.
SimplicialComplex add_face(const SimplicialComplex& s, VertexMask face);

/// The full simplex on `labels`.
SimplicialComplex full_simplex(const LabelSet& labels);

/// "1".."n", zero-padded to a common width so lexicographic order is numeric.
LabelSet numbered_labels(int n, const std::string& prefix = "");

/// Returns `base`, or `base` with primes appended, avoiding every label in `taken`.
std::string fresh_label(const std::string& base, const LabelSet& taken);

}  // namespace facering
