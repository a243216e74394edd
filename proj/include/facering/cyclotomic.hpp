#pragma once

#include <span>
#include <string>
#include <vector>

#include "facering/check_report.hpp"
#include "facering/complex.hpp"
#include "facering/polynomial.hpp"

namespace facering {

int mobius(long n);
long euler_phi(long n);

/// Φ_n. Requires 1 <= n <= 10^6.
IntPolynomial cyclotomic_polynomial(long n);

/// How the facet labels A ∪ {φ(n)+1, ..., n} become residues mod n.
///   kZeroBased: label ℓ is residue ℓ mod n (so n is residue 0).
///   kOneBased:  label ℓ is residue ℓ - 1.
///   kTruncated: labels are residues and the tail stops at n - 1.
enum class ResidueLabeling { kZeroBased, kOneBased, kTruncated };
std::string_view to_string(ResidueLabeling labeling);
ResidueLabeling parse_labeling(std::string_view text);
inline constexpr ResidueLabeling kAllLabelings[] = {ResidueLabeling::kZeroBased, ResidueLabeling::kOneBased,
                                                    ResidueLabeling::kTruncated};

struct CyclotomicSpec {
  std::vector<long> primes;  // distinct primes, ascending
  ResidueLabeling labeling = ResidueLabeling::kZeroBased;

  /// Sorts and validates. Throws InvalidInput on repeats, nonprimes, or d < 2.
  explicit CyclotomicSpec(std::vector<long> primes, ResidueLabeling labeling = ResidueLabeling::kZeroBased);

  long n() const;
  int d() const { return static_cast<int>(primes.size()); }
  /// Vertex labels of K_{p_1,...,p_d}, group by group.
  LabelSet vertex_labels() const;
  std::string vertex_label(int group, long residue) const;
};

/// The facet of K_{p_1,...,p_d} with vertex (j mod p_i) in group i.
LabelSet facet_of_residue(const CyclotomicSpec& spec, long j);

/// Residues mod n of the facets kept in K_A under the labeling of `spec`.
std::vector<long> selected_residues(const CyclotomicSpec& spec, std::span<const long> a);

/// Full (d-2)-skeleton of K_{p_1,...,p_d} plus the facets selected by A.
SimplicialComplex build_K_A(const CyclotomicSpec& spec, std::span<const long> a);

/// Compares the reduced homology of K_{j} with the pattern predicted by c_j
/// (Z/c_j in degree d-2) under each labeling; passes if any labeling matches.
CheckReport check_cycltop(const CyclotomicSpec& spec, long j,
                          std::span<const ResidueLabeling> labelings = kAllLabelings);

/// For S_j = apex lift of K_{j}: h_d(K_{j}) against 1 + (-1)^d (c_j = 0)
/// or (-1)^d (c_j != 0), plus the literal constant term of χ_c(S_j) and the
/// identity h_d = (-1)^(d-1)(χ - 1). Passes if any labeling matches.
CheckReport check_cyclcheck(const CyclotomicSpec& spec, long j,
                            std::span<const ResidueLabeling> labelings = kAllLabelings);

}  // namespace facering
