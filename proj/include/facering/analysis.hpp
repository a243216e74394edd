#pragma once

#include <optional>

#include "facering/auxiliary.hpp"
#include "facering/check_report.hpp"
#include "facering/complex.hpp"
#include "facering/polynomial.hpp"

namespace facering {

/// Independence complex of U_n^r on "1".."n": all subsets of size <= r.
/// Requires 1 <= r <= n <= 20.
SimplicialComplex uniform_matroid_complex(int n, int r);

/// Boundary of the octahedron on a..f with diagonals ac, bd, ef.
SimplicialComplex octahedron_boundary();

/// Six vertices whose minimal nonfaces are three disjoint pairs covering them.
bool is_octahedron(const SimplicialComplex& t);

/// Log-concavity of the h-vector, the f-vector, the coefficients of χ_c(S)
/// and of χ_c(S)(t - 1). χ_c comes from inclusion-exclusion when S has at
/// most 25 minimal nonfaces, otherwise from `assign` through t^n K_T(1/t);
/// without either that part is NOT_APPLICABLE.
CheckReport log_concavity_report(const SimplicialComplex& s, const std::optional<AlphaAssignment>& assign,
                                 LogConcavityMode mode = LogConcavityMode::kSigned);

/// h_i = h_{d-i} for all i.
CheckReport dehn_sommerville_check(const SimplicialComplex& s);

/// χ_c(S) = t^n K_T(1/t) as a signed palindrome with sign (-1)^(n_T - d_T).
/// When T is an octahedron the literal claim that t^5 and t^3 share a
/// coefficient is evaluated and recorded alongside.
CheckReport reciprocity_report(const SimplicialComplex& s, const AlphaAssignment& assign);

}  // namespace facering
