#include "facering/analysis.hpp"

#include "facering/chromatic.hpp"
#include "facering/errors.hpp"
#include "facering/hilbert.hpp"

namespace facering {

SimplicialComplex uniform_matroid_complex(int n, int r) {
  if (r < 1 || r > n || n > 20) {
    throw InvalidInput("uniform matroid needs 1 <= r <= n <= 20; got n = " + std::to_string(n) +
                       ", r = " + std::to_string(r));
  }
  return SimplicialComplex::from_face_predicate(numbered_labels(n),
                                                [r](VertexMask m) { return cardinality(m) <= r; });
}

SimplicialComplex octahedron_boundary() {
  return SimplicialComplex::from_minimal_nonfaces({"a", "b", "c", "d", "e", "f"},
                                                  std::vector<LabelSet>{{"a", "c"}, {"b", "d"}, {"e", "f"}});
}

bool is_octahedron(const SimplicialComplex& t) {
  const auto& g = t.minimal_nonfaces().generators();
  if (t.vertex_count() != 6 || g.size() != 3) return false;
  VertexMask seen = 0;
  for (const VertexMask m : g) {
    if (cardinality(m) != 2 || (seen & m)) return false;
    seen |= m;
  }
  return seen == full_mask(6);
}

namespace {

CheckReport sequence_check(std::string name, const std::vector<BigInt>& seq, LogConcavityMode mode) {
  CheckReport sub = is_log_concave(seq, mode);
  sub.name = std::move(name);
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : seq) values.push_back(v.get_str());
  sub.details["sequence"] = values;
  const IndexWindow w = largest_log_concave_window(seq, mode);
  sub.details["largest_window"] = {w.lo, w.hi};
  return sub;
}

}  // namespace

CheckReport log_concavity_report(const SimplicialComplex& s, const std::optional<AlphaAssignment>& assign,
                                 LogConcavityMode mode) {
  CheckReport report = CheckReport::pass("log_concavity");
  report.details["mode"] = std::string(to_string(mode));
  report.children.push_back(sequence_check("h_vector", h_vector(s).entries, mode));
  report.children.push_back(sequence_check("f_vector", s.f_vector(), mode));

  std::optional<IntPolynomial> chi;
  std::string route;
  if (s.minimal_nonfaces().size() <= 25) {
    chi = chromatic_polynomial(s);
    route = "inclusion_exclusion";
  } else if (assign) {
    chi = chromatic_from_auxiliary(auxiliary_complex(*assign), s.vertex_count());
    route = "auxiliary_K_identity";
  }
  if (chi) {
    CheckReport c = sequence_check("chi_c", chi->coeffs(), mode);
    c.details["route"] = route;
    c.details["polynomial"] = to_string(*chi);
    report.children.push_back(std::move(c));
    const IntPolynomial shifted = substitute_shift(*chi);
    CheckReport sc = sequence_check("chi_c_shifted", shifted.coeffs(), mode);
    sc.details["polynomial"] = to_string(shifted);
    report.children.push_back(std::move(sc));
  } else {
    for (const char* name : {"chi_c", "chi_c_shifted"}) {
      CheckReport na = CheckReport::pass(name);
      na.verdict = Verdict::kNotApplicable;
      na.witness = "more than 25 minimal nonfaces and no alpha assignment";
      report.children.push_back(std::move(na));
    }
  }
  for (const auto& c : report.children) {
    if (c.verdict == Verdict::kFail && report.passed()) {
      report.verdict = Verdict::kFail;
      report.witness = c.name + ": " + c.witness;
    }
  }
  return report;
}

CheckReport dehn_sommerville_check(const SimplicialComplex& s) {
  const HVector h = h_vector(s);
  CheckReport report = CheckReport::pass("dehn_sommerville");
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : h.entries) values.push_back(v.get_str());
  report.details["h"] = values;
  const int d = h.d();
  for (int i = 0; i <= d / 2; ++i) {
    const auto& lo = h.entries[static_cast<std::size_t>(i)];
    const auto& hi = h.entries[static_cast<std::size_t>(d - i)];
    if (lo != hi) {
      report.verdict = Verdict::kFail;
      report.witness = "h_" + std::to_string(i) + " = " + lo.get_str() + " but h_" + std::to_string(d - i) +
                       " = " + hi.get_str();
      break;
    }
  }
  return report;
}

CheckReport reciprocity_report(const SimplicialComplex& s, const AlphaAssignment& assign) {
  const SimplicialComplex t = auxiliary_complex(assign);
  CheckReport report = CheckReport::pass("reciprocity");
  if (s.minimal_nonfaces().size() <= 25) {
    const CheckReport theorem = verify_main_theorem(s, assign);
    if (!theorem.passed()) {
      throw InvalidInput("reciprocity needs the K-form identity to hold; " + theorem.witness);
    }
    report.details["precondition_checked"] = true;
  } else {
    report.details["precondition_checked"] = false;
  }
  const int n_s = s.vertex_count();
  const int n_t = t.vertex_count();
  const int d_t = h_vector(t).d();
  const int sign = (n_t - d_t) % 2 == 0 ? 1 : -1;
  const IntPolynomial chi = chromatic_from_auxiliary(t, n_s);
  report.details["chi_c"] = to_string(chi);
  report.details["sign"] = sign;
  report.details["n_T"] = n_t;
  report.details["d_T"] = d_t;

  CheckReport pal = is_signed_palindrome(chi, sign);
  nlohmann::json pairs = nlohmann::json::array();
  const int lo = chi.low_degree();
  const int hi = chi.degree();
  for (int i = 0; lo + i <= hi - i; ++i) {
    pairs.push_back({{"low", lo + i}, {"high", hi - i}, {"b_low", chi.coeff(lo + i).get_str()},
                     {"b_high", chi.coeff(hi - i).get_str()}});
  }
  pal.details["pairs"] = std::move(pairs);
  report.verdict = pal.verdict;
  report.witness = pal.witness;
  report.children.push_back(std::move(pal));

  if (is_octahedron(t)) {
    CheckReport literal = CheckReport::pass("literal_t5_t3");
    literal.details["informational"] = true;
    literal.details["b_5"] = chi.coeff(5).get_str();
    literal.details["b_3"] = chi.coeff(3).get_str();
    if (chi.coeff(5) != chi.coeff(3)) {
      literal.verdict = Verdict::kFail;
      literal.witness = "coefficient of t^5 is " + chi.coeff(5).get_str() + ", of t^3 is " + chi.coeff(3).get_str();
    }
    report.children.push_back(std::move(literal));
  }
  return report;
}

}  // namespace facering
