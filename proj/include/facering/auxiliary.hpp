#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facering/check_report.hpp"
#include "facering/complex.hpp"
#include "facering/hilbert.hpp"
#include "facering/polynomial.hpp"

namespace facering {

/// Companion sets α_i for the minimal nonfaces σ_i of a complex, in a
/// fixed order (witnesses refer to 1-based positions in that order).
/// The α sets live on their own ground set, which always contains their
/// union and may carry extra vertices (lifts keep the vertex set of T).
class AlphaAssignment {
 public:
  struct Pair {
    LabelSet sigma;
    LabelSet alpha;
  };

  explicit AlphaAssignment(std::vector<Pair> pairs, LabelSet extra_ground = {});

  std::size_t size() const { return pairs_.size(); }
  const std::vector<Pair>& pairs() const { return pairs_; }

  const LabelSet& sigma_universe() const { return sigma_universe_; }
  const LabelSet& alpha_ground() const { return alpha_ground_; }
  const std::vector<VertexMask>& sigmas() const { return sigmas_; }
  const std::vector<VertexMask>& alphas() const { return alphas_; }

 private:
  std::vector<Pair> pairs_;
  LabelSet sigma_universe_;
  LabelSet alpha_ground_;
  std::vector<VertexMask> sigmas_;
  std::vector<VertexMask> alphas_;
};

enum class PropertyIMode { kLiteral, kStrict };
std::string_view to_string(PropertyIMode mode);

/// |α_i| = |σ_i| - 1, and for I ⊆ [r], p ∉ I:
///   σ_I ∩ σ_p = ∅  ⇒  α_I ∩ α_p = ∅,
///   otherwise |α_I ∩ α_p| = |σ_I ∩ σ_p| - 1, required for |I| >= 2 in
///   LITERAL mode and for |I| >= 1 in STRICT mode.
/// Pairs (I, p) are scanned with J = I ∪ {p} in increasing bitmask order
/// and p from the highest member of J down. At most 20 pairs.
CheckReport check_property_I(const AlphaAssignment& assign, PropertyIMode mode);

/// |α_I| = |σ_I| - c(I) for every nonempty I, scanned in bitmask order.
/// At most 20 pairs.
CheckReport check_target_invariant(const AlphaAssignment& assign);

/// First assignment with every α_i = σ_i minus one vertex that passes
/// check_target_invariant. Candidates for each σ_i are tried in
/// lexicographic order, earlier nonfaces varying slowest.
/// Refuses a search space (product of |σ_i|) above 10^6.
std::optional<AlphaAssignment> search_alpha(const SimplicialComplex& s);

/// T(S): the complex on the α ground set whose minimal nonfaces are the α_i.
/// Singleton α sets are allowed (those vertices are not faces of T).
SimplicialComplex auxiliary_complex(const AlphaAssignment& assign);

struct Lift {
  SimplicialComplex complex;
  AlphaAssignment assignment;
};

/// S on V(T) ∪ {q} with minimal nonfaces α_i ∪ {q}.
Lift lift_with_apex(const SimplicialComplex& t);
/// S on V(T) plus one fresh vertex per minimal nonface, σ_i = α_i ∪ {q_i}.
/// Requires pairwise disjoint minimal nonfaces in T.
Lift lift_disjoint(const SimplicialComplex& t);

/// t^n · K_T(1/t): the chromatic polynomial of any S on n vertices whose
/// auxiliary complex is T, without enumerating subsets of S's nonfaces.
IntPolynomial chromatic_from_auxiliary(const SimplicialComplex& t, int n);

/// Checks χ_c(S) = t^n K_T(1/t) (verdict) and records whether the printed
/// h-form χ_c(S) = t^n h_T(1/t) also holds.
CheckReport verify_main_theorem(const SimplicialComplex& s, const AlphaAssignment& assign);

/// c(I) = a for all nonempty I, then χ_c(S) - t^n = t^(n+a) (K_S(1/t) - 1).
CheckReport verify_constant_component(const SimplicialComplex& s, int a);

struct HilbertWindow {
  IntPolynomial window;  // p_r = [t^(a+r)] K_S(t)
  CheckReport report;
};

/// Brenti criterion on the coefficients of K_S from degree a upward.
HilbertWindow hilbert_polynomial_window(const SimplicialComplex& s, int a);

/// Makes an assignment for `s` from labeled pairs and checks that the σ
/// sets are exactly the minimal nonfaces of `s`.
AlphaAssignment assignment_for(const SimplicialComplex& s, std::vector<AlphaAssignment::Pair> pairs,
                               LabelSet extra_ground = {});

}  // namespace facering
