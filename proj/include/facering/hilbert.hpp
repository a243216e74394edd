#pragma once

#include <span>
#include <vector>

#include "facering/check_report.hpp"
#include "facering/complex.hpp"
#include "facering/polynomial.hpp"

namespace facering {

/// Where a K-polynomial came from. K(t) (numerator of the Hilbert series
/// over (1-t)^n) and the h-polynomial (numerator over (1-t)^d) differ by
/// (1-t)^(n-d); the marker keeps the two objects apart.
enum class KSource { kInclusionExclusion, kFromH };

struct KPolynomial {
  IntPolynomial poly;
  KSource source = KSource::kInclusionExclusion;
};

struct HVector {
  std::vector<BigInt> entries;  // h_0 .. h_d
  int d() const { return static_cast<int>(entries.size()) - 1; }
};

/// sum_{I ⊆ [r]} (-1)^|I| t^|σ_I|, σ_I the union of the generators in I.
KPolynomial numerator_by_inclusion_exclusion(const NonfaceFamily& gens);

/// h_j = sum_{i<=j} (-1)^(j-i) C(d-i, j-i) f_{i-1}. `f` is (f_{-1},...,f_{d-1}).
HVector h_from_f(std::span<const BigInt> f, int d);
/// f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i.
std::vector<BigInt> f_from_h(const HVector& h, int d);

HVector h_vector(const SimplicialComplex& s);
IntPolynomial h_polynomial(const HVector& h);

/// h_S(t) · (1-t)^(n-d).
KPolynomial numerator_from_h(const SimplicialComplex& s);

/// Dimension of the degree-m piece of the face ring: sum over faces F of
/// C(m-1, |F|-1), with only ∅ contributing at m = 0. Requires m <= 12.
BigInt standard_monomial_count(const SimplicialComplex& s, int m);

/// Coefficients of t^0..t^max_degree in k(t) / (1-t)^n.
std::vector<BigInt> hilbert_series_coefficients(const IntPolynomial& k, int n, int max_degree);

/// h_d = (-1)^(d-1) (χ - 1) with χ the non-reduced Euler characteristic.
CheckReport check_top_h_identity(const SimplicialComplex& s);

}  // namespace facering
