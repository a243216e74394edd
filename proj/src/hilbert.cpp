#include "facering/hilbert.hpp"

#include "subset_walk.hpp"

namespace facering {

KPolynomial numerator_by_inclusion_exclusion(const NonfaceFamily& gens) {
  const int top = cardinality(gens.support());
  std::vector<std::int64_t> acc(static_cast<std::size_t>(top) + 1, 0);
  acc[0] = 1;
  detail::walk_generator_subsets(gens.generators(), [&](VertexMask uni, int, int size) {
    acc[static_cast<std::size_t>(cardinality(uni))] += (size % 2 == 0) ? 1 : -1;
  });
  std::vector<BigInt> coeffs;
  for (const auto c : acc) coeffs.emplace_back(static_cast<long>(c));
  return {IntPolynomial(std::move(coeffs)), KSource::kInclusionExclusion};
}

HVector h_from_f(std::span<const BigInt> f, int d) {
  if (d < 0 || f.size() != static_cast<std::size_t>(d) + 1) {
    throw InvalidInput("h_from_f: f-vector length " + std::to_string(f.size()) +
                       " inconsistent with d = " + std::to_string(d));
  }
  if (f[0] != 1) throw InvalidInput("h_from_f: f_{-1} must be 1");
  HVector h;
  for (int j = 0; j <= d; ++j) {
    BigInt hj = 0;
    for (int i = 0; i <= j; ++i) {
      const BigInt term = binomial(d - i, j - i) * f[static_cast<std::size_t>(i)];
      if ((j - i) % 2 == 0) hj += term;
      else hj -= term;
    }
    h.entries.push_back(hj);
  }
  return h;
}

std::vector<BigInt> f_from_h(const HVector& h, int d) {
  if (d < 0 || h.entries.size() != static_cast<std::size_t>(d) + 1) {
    throw InvalidInput("f_from_h: h-vector length inconsistent with d = " + std::to_string(d));
  }
  std::vector<BigInt> f;
  for (int j = 0; j <= d; ++j) {
    BigInt fj = 0;
    for (int i = 0; i <= j; ++i) fj += binomial(d - i, j - i) * h.entries[static_cast<std::size_t>(i)];
    f.push_back(fj);
  }
  return f;
}

HVector h_vector(const SimplicialComplex& s) {
  const auto f = s.f_vector();
  return h_from_f(f, static_cast<int>(f.size()) - 1);
}

IntPolynomial h_polynomial(const HVector& h) { return IntPolynomial(h.entries); }

KPolynomial numerator_from_h(const SimplicialComplex& s) {
  const HVector h = h_vector(s);
  const IntPolynomial one_minus_t{1, -1};
  return {h_polynomial(h) * pow(one_minus_t, static_cast<unsigned>(s.vertex_count() - h.d())),
          KSource::kFromH};
}

BigInt standard_monomial_count(const SimplicialComplex& s, int m) {
  if (m < 0) throw InvalidInput("standard_monomial_count: negative degree");
  if (m > 12) throw GuardExceeded("degree <= 12", "standard monomial count limited to degree 12");
  if (m == 0) return 1;
  const auto f = s.f_vector();
  BigInt total = 0;
  for (std::size_t size = 1; size < f.size(); ++size) {
    total += f[size] * binomial(m - 1, static_cast<long>(size) - 1);
  }
  return total;
}

std::vector<BigInt> hilbert_series_coefficients(const IntPolynomial& k, int n, int max_degree) {
  // 1/(1-t)^n = sum_j C(n-1+j, j) t^j.
  std::vector<BigInt> out;
  for (int m = 0; m <= max_degree; ++m) {
    BigInt c = 0;
    for (int i = 0; i <= std::min(m, k.degree()); ++i) {
      const BigInt tail = n == 0 ? BigInt(m - i == 0 ? 1 : 0) : binomial(n - 1 + m - i, m - i);
      c += k.coeff(i) * tail;
    }
    out.push_back(c);
  }
  return out;
}

CheckReport check_top_h_identity(const SimplicialComplex& s) {
  const HVector h = h_vector(s);
  const int d = h.d();
  const BigInt chi = euler_characteristics(s).chi;
  const BigInt expected = (d % 2 == 1 ? 1 : -1) * (chi - 1);  // (-1)^(d-1)
  CheckReport report = CheckReport::pass("top_h_identity");
  report.details["d"] = d;
  report.details["h_d"] = h.entries.back().get_str();
  report.details["chi"] = chi.get_str();
  report.details["expected"] = expected.get_str();
  if (h.entries.back() != expected) {
    report.verdict = Verdict::kFail;
    report.witness = "h_d = " + h.entries.back().get_str() + " but (-1)^(d-1)(chi-1) = " + expected.get_str();
  }
  return report;
}

}  // namespace facering
