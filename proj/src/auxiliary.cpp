#include "facering/auxiliary.hpp"

#include <algorithm>
#include <set>

#include "facering/chromatic.hpp"
#include "facering/errors.hpp"
#include "subset_walk.hpp"

namespace facering {

namespace {

constexpr int kMaxScanPairs = 20;

void check_pair_guard(std::size_t r) {
  if (r > static_cast<std::size_t>(kMaxScanPairs)) {
    throw GuardExceeded("pair count <= 20", "2^r scan refused for r = " + std::to_string(r) +
                                                " nonfaces (limit 20)");
  }
}

LabelSet sorted_union(const std::vector<AlphaAssignment::Pair>& pairs, bool alpha, const LabelSet& extra) {
  std::set<std::string> all(extra.begin(), extra.end());
  for (const auto& p : pairs) {
    const auto& side = alpha ? p.alpha : p.sigma;
    all.insert(side.begin(), side.end());
  }
  if (all.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InvalidInput("assignment ground set exceeds 64 labels");
  }
  return {all.begin(), all.end()};
}

VertexMask mask_in(const LabelSet& sorted_universe, const LabelSet& subset) {
  VertexMask m = 0;
  for (const auto& l : subset) {
    const auto it = std::lower_bound(sorted_universe.begin(), sorted_universe.end(), l);
    m |= bit(static_cast<int>(it - sorted_universe.begin()));
  }
  return m;
}

std::string subset_name(std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (const int i : indices_of(mask)) {
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

// Unions over every subset of a family, indexed by bitmask.
std::vector<VertexMask> subset_unions(const std::vector<VertexMask>& sets) {
  std::vector<VertexMask> uni(std::size_t{1} << sets.size(), 0);
  for (std::size_t m = 1; m < uni.size(); ++m) {
    uni[m] = uni[m & (m - 1)] | sets[static_cast<std::size_t>(std::countr_zero(m))];
  }
  return uni;
}

std::vector<std::uint8_t> subset_components(const std::vector<VertexMask>& sets) {
  std::vector<std::uint8_t> comps(std::size_t{1} << sets.size(), 0);
  std::vector<VertexMask> chosen;
  for (std::size_t m = 1; m < comps.size(); ++m) {
    chosen.clear();
    for (const int i : indices_of(m)) chosen.push_back(sets[static_cast<std::size_t>(i)]);
    comps[m] = static_cast<std::uint8_t>(component_count(chosen));
  }
  return comps;
}

// First I (bitmask order) with |alpha_I| != |sigma_I| - c(I), or 0.
std::uint64_t first_target_failure(const std::vector<VertexMask>& sigma_unions,
                                   const std::vector<std::uint8_t>& comps,
                                   const std::vector<VertexMask>& alphas) {
  std::vector<VertexMask> alpha_unions(sigma_unions.size(), 0);
  for (std::size_t m = 1; m < sigma_unions.size(); ++m) {
    alpha_unions[m] = alpha_unions[m & (m - 1)] | alphas[static_cast<std::size_t>(std::countr_zero(m))];
    if (cardinality(alpha_unions[m]) != cardinality(sigma_unions[m]) - comps[m]) return m;
  }
  return 0;
}

IntPolynomial k_polynomial_of(const SimplicialComplex& t) {
  if (t.minimal_nonfaces().size() <= static_cast<std::size_t>(detail::kMaxWalkGenerators)) {
    return numerator_by_inclusion_exclusion(t.minimal_nonfaces()).poly;
  }
  return numerator_from_h(t).poly;
}

}  // namespace

AlphaAssignment::AlphaAssignment(std::vector<Pair> pairs, LabelSet extra_ground)
    : pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    if (p.sigma.empty()) throw InvalidInput("assignment: empty sigma set");
    if (std::set<std::string>(p.sigma.begin(), p.sigma.end()).size() != p.sigma.size() ||
        std::set<std::string>(p.alpha.begin(), p.alpha.end()).size() != p.alpha.size()) {
      throw InvalidInput("assignment: repeated label inside a set");
    }
  }
  sigma_universe_ = sorted_union(pairs_, false, {});
  alpha_ground_ = sorted_union(pairs_, true, extra_ground);
  for (const auto& p : pairs_) {
    sigmas_.push_back(mask_in(sigma_universe_, p.sigma));
    alphas_.push_back(mask_in(alpha_ground_, p.alpha));
  }
}

std::string_view to_string(PropertyIMode mode) {
  return mode == PropertyIMode::kStrict ? "strict" : "literal";
}

CheckReport check_property_I(const AlphaAssignment& assign, PropertyIMode mode) {
  const std::size_t r = assign.size();
  check_pair_guard(r);
  CheckReport report = CheckReport::pass("property_I");
  report.details["mode"] = std::string(to_string(mode));
  report.details["r"] = r;

  const auto& sigmas = assign.sigmas();
  const auto& alphas = assign.alphas();
  for (std::size_t i = 0; i < r; ++i) {
    if (cardinality(alphas[i]) != cardinality(sigmas[i]) - 1) {
      report.verdict = Verdict::kFail;
      report.witness = "|alpha_" + std::to_string(i + 1) + "| = " + std::to_string(cardinality(alphas[i])) +
                       " but |sigma_" + std::to_string(i + 1) + "| - 1 = " +
                       std::to_string(cardinality(sigmas[i]) - 1);
      return report;
    }
  }

  const auto sigma_unions = subset_unions(sigmas);
  const auto alpha_unions = subset_unions(alphas);
  const int min_size = mode == PropertyIMode::kStrict ? 1 : 2;
  for (std::uint64_t j = 1; j < sigma_unions.size(); ++j) {
    if (cardinality(j) < 2) continue;
    auto members = indices_of(j);
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      const auto p = static_cast<std::size_t>(*it);
      const std::uint64_t i_mask = j & ~(std::uint64_t{1} << p);
      const int s_meet = cardinality(sigma_unions[i_mask] & sigmas[p]);
      const int a_meet = cardinality(alpha_unions[i_mask] & alphas[p]);
      std::string why;
      if (s_meet == 0 && a_meet != 0) {
        why = "sigma_I and sigma_p are disjoint but |alpha_I ∩ alpha_p| = " + std::to_string(a_meet);
      } else if (s_meet != 0 && cardinality(i_mask) >= min_size && a_meet != s_meet - 1) {
        why = "|alpha_I ∩ alpha_p| = " + std::to_string(a_meet) + " but |sigma_I ∩ sigma_p| - 1 = " +
              std::to_string(s_meet - 1);
      }
      if (!why.empty()) {
        report.verdict = Verdict::kFail;
        report.witness = "I=" + subset_name(i_mask) + ", p=" + std::to_string(p + 1) + ": " + why;
        report.details["I"] = indices_of(i_mask);
        report.details["p"] = p;
        return report;
      }
    }
  }
  return report;
}

CheckReport check_target_invariant(const AlphaAssignment& assign) {
  check_pair_guard(assign.size());
  CheckReport report = CheckReport::pass("target_invariant");
  report.details["r"] = assign.size();
  const auto sigma_unions = subset_unions(assign.sigmas());
  const auto comps = subset_components(assign.sigmas());
  const std::uint64_t bad = first_target_failure(sigma_unions, comps, assign.alphas());
  if (bad != 0) {
    VertexMask alpha_union = 0;
    for (const int i : indices_of(bad)) alpha_union |= assign.alphas()[static_cast<std::size_t>(i)];
    const int s = cardinality(sigma_unions[bad]);
    report.verdict = Verdict::kFail;
    report.witness = "I=" + subset_name(bad) + ": |sigma_I| - c(I) = " + std::to_string(s) + " - " +
                     std::to_string(comps[bad]) + " = " + std::to_string(s - comps[bad]) +
                     " but |alpha_I| = " + std::to_string(cardinality(alpha_union));
  }
  return report;
}

std::optional<AlphaAssignment> search_alpha(const SimplicialComplex& s) {
  const auto& gens = s.minimal_nonfaces().generators();
  check_pair_guard(gens.size());
  BigInt space = 1;
  for (const VertexMask g : gens) space *= cardinality(g);
  if (space > 1000000) {
    throw GuardExceeded("search space <= 10^6", "alpha search space " + space.get_str() + " exceeds 10^6");
  }

  // Candidates per nonface: drop one vertex, lexicographic order on the result.
  std::vector<std::vector<VertexMask>> candidates;
  for (const VertexMask g : gens) {
    std::vector<VertexMask> c;
    for (const int v : indices_of(g)) c.push_back(g & ~bit(v));
    std::sort(c.begin(), c.end(), lex_less);
    candidates.push_back(std::move(c));
  }

  const auto sigma_unions = subset_unions(gens);
  const auto comps = subset_components(gens);
  std::vector<std::size_t> choice(gens.size(), 0);
  std::vector<VertexMask> alphas(gens.size());
  while (true) {
    for (std::size_t i = 0; i < gens.size(); ++i) alphas[i] = candidates[i][choice[i]];
    if (first_target_failure(sigma_unions, comps, alphas) == 0) {
      std::vector<AlphaAssignment::Pair> pairs;
      for (std::size_t i = 0; i < gens.size(); ++i) pairs.push_back({s.labels_of(gens[i]), s.labels_of(alphas[i])});
      return AlphaAssignment(std::move(pairs));
    }
    std::size_t pos = gens.size();
    while (pos > 0) {
      --pos;
      if (++choice[pos] < candidates[pos].size()) break;
      choice[pos] = 0;
      if (pos == 0) return std::nullopt;
    }
    if (gens.empty()) return std::nullopt;
  }
}

SimplicialComplex auxiliary_complex(const AlphaAssignment& assign) {
  return SimplicialComplex::from_minimal_nonfaces(assign.alpha_ground(), assign.alphas(),
                                                  VertexPolicy::kAllowNonfaceVertices);
}

Lift lift_with_apex(const SimplicialComplex& t) {
  const std::string q = fresh_label("q", t.labels());
  LabelSet labels = t.labels();
  labels.push_back(q);
  std::vector<LabelSet> gens;
  std::vector<AlphaAssignment::Pair> pairs;
  for (const VertexMask g : t.minimal_nonfaces().generators()) {
    LabelSet alpha = t.labels_of(g);
    LabelSet sigma = alpha;
    sigma.push_back(q);
    gens.push_back(sigma);
    pairs.push_back({std::move(sigma), std::move(alpha)});
  }
  return {SimplicialComplex::from_minimal_nonfaces(labels, gens), AlphaAssignment(std::move(pairs), t.labels())};
}

Lift lift_disjoint(const SimplicialComplex& t) {
  const auto& tg = t.minimal_nonfaces().generators();
  for (std::size_t i = 0; i < tg.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (tg[i] & tg[j]) {
        throw InvalidInput("disjoint lift needs pairwise disjoint minimal nonfaces; " +
                           subset_name(tg[j]) + " meets " + subset_name(tg[i]));
      }
    }
  }
  LabelSet labels = t.labels();
  std::vector<LabelSet> gens;
  std::vector<AlphaAssignment::Pair> pairs;
  for (std::size_t i = 0; i < tg.size(); ++i) {
    const std::string q = fresh_label("q" + std::to_string(i + 1), labels);
    labels.push_back(q);
    LabelSet alpha = t.labels_of(tg[i]);
    LabelSet sigma = alpha;
    sigma.push_back(q);
    gens.push_back(sigma);
    pairs.push_back({std::move(sigma), std::move(alpha)});
  }
  return {SimplicialComplex::from_minimal_nonfaces(labels, gens), AlphaAssignment(std::move(pairs), t.labels())};
}

IntPolynomial chromatic_from_auxiliary(const SimplicialComplex& t, int n) {
  return reciprocal(k_polynomial_of(t), n);
}

CheckReport verify_main_theorem(const SimplicialComplex& s, const AlphaAssignment& assign) {
  const SimplicialComplex t = auxiliary_complex(assign);
  const int n = s.vertex_count();
  const IntPolynomial lhs = chromatic_polynomial(s);
  const IntPolynomial k_t = k_polynomial_of(t);
  const HVector h_t = h_vector(t);
  const IntPolynomial h_poly = h_polynomial(h_t);

  CheckReport report = CheckReport::pass("main_theorem");
  report.details["n_S"] = n;
  report.details["n_T"] = t.vertex_count();
  report.details["d_T"] = h_t.d();
  report.details["chi_c"] = to_string(lhs);
  report.details["K_T"] = to_string(k_t);
  report.details["h_T"] = to_string(h_poly);
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& p : assign.pairs()) alpha.push_back({{"sigma", p.sigma}, {"alpha", p.alpha}});
  report.details["alpha"] = std::move(alpha);

  auto compare = [&](std::string name, const IntPolynomial& base) {
    CheckReport sub = CheckReport::pass(std::move(name));
    if (n < base.degree()) {
      sub.verdict = Verdict::kFail;
      sub.witness = "degree " + std::to_string(base.degree()) + " exceeds n_S = " + std::to_string(n);
      return sub;
    }
    const IntPolynomial rhs = reciprocal(base, n);
    sub.details["rhs"] = to_string(rhs);
    if (!(rhs == lhs)) {
      sub.verdict = Verdict::kFail;
      sub.witness = "chi_c = " + to_string(lhs) + " but rhs = " + to_string(rhs);
    }
    return sub;
  };
  CheckReport k_form = compare("k_form", k_t);
  CheckReport h_form = compare("h_form", h_poly);
  h_form.details["informational"] = true;
  report.verdict = k_form.verdict;
  report.witness = k_form.witness;
  report.children.push_back(std::move(k_form));
  report.children.push_back(std::move(h_form));
  if (assign.size() <= static_cast<std::size_t>(kMaxScanPairs)) {
    CheckReport inv = check_target_invariant(assign);
    inv.details["informational"] = true;
    report.children.push_back(std::move(inv));
  }
  return report;
}

CheckReport verify_constant_component(const SimplicialComplex& s, int a) {
  const auto& gens = s.minimal_nonfaces().generators();
  check_pair_guard(gens.size());
  const int n = s.vertex_count();
  CheckReport report = CheckReport::pass("constant_component");
  report.details["a"] = a;

  const auto comps = subset_components(gens);
  for (std::uint64_t m = 1; m < comps.size(); ++m) {
    if (comps[m] != a) {
      report.verdict = Verdict::kFail;
      report.witness = "c(I) = " + std::to_string(comps[m]) + " for I=" + subset_name(m);
      report.details["c_check"] = "fail";
      return report;
    }
  }
  report.details["c_check"] = "pass";

  const IntPolynomial lhs = chromatic_polynomial(s) - IntPolynomial::monomial(1, n);
  const IntPolynomial tail = numerator_by_inclusion_exclusion(s.minimal_nonfaces()).poly - IntPolynomial{1};
  report.details["lhs"] = to_string(lhs);
  report.details["K_minus_1"] = to_string(tail);
  if (n + a < tail.degree()) {
    report.verdict = Verdict::kFail;
    report.witness = "t^(n+a)(K(1/t) - 1) has negative powers of t";
    return report;
  }
  const IntPolynomial rhs = reciprocal(tail, n + a);
  report.details["rhs"] = to_string(rhs);
  if (!(rhs == lhs)) {
    report.verdict = Verdict::kFail;
    report.witness = "chi_c - t^n = " + to_string(lhs) + " but t^(n+a)(K(1/t) - 1) = " + to_string(rhs);
  }
  return report;
}

HilbertWindow hilbert_polynomial_window(const SimplicialComplex& s, int a) {
  const CheckReport cc = verify_constant_component(s, a);
  if (cc.details.value("c_check", "") != "pass") {
    throw InvalidInput("hilbert window needs c(I) = " + std::to_string(a) + " for every I; " + cc.witness);
  }
  const IntPolynomial k = numerator_by_inclusion_exclusion(s.minimal_nonfaces()).poly;
  std::vector<BigInt> window;
  for (int i = std::max(a, 0); i <= k.degree(); ++i) window.push_back(k.coeff(i));
  HilbertWindow out{IntPolynomial(window), CheckReport::pass("hilbert_window")};
  out.report.details["a"] = a;
  out.report.details["K"] = to_string(k);
  if (out.window.is_zero()) {
    out.report.verdict = Verdict::kNotApplicable;
    out.report.witness = "window is empty";
    return out;
  }
  CheckReport brenti = brenti_criterion(out.window);
  out.report.verdict = brenti.verdict;
  out.report.witness = brenti.witness;
  out.report.details["window"] = brenti.details["coeffs"];
  out.report.children.push_back(std::move(brenti));
  return out;
}

AlphaAssignment assignment_for(const SimplicialComplex& s, std::vector<AlphaAssignment::Pair> pairs,
                               LabelSet extra_ground) {
  std::multiset<VertexMask> given;
  for (const auto& p : pairs) given.insert(s.mask_of(p.sigma));
  const auto& gens = s.minimal_nonfaces().generators();
  if (given != std::multiset<VertexMask>(gens.begin(), gens.end())) {
    throw InvalidInput("the sigma sets of the assignment are not the minimal nonfaces of the complex");
  }
  return AlphaAssignment(std::move(pairs), std::move(extra_ground));
}

}  // namespace facering
