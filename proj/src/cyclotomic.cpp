#include "facering/cyclotomic.hpp"

#include <algorithm>
#include <set>

#include "facering/auxiliary.hpp"
#include "facering/errors.hpp"
#include "facering/hilbert.hpp"
#include "facering/homology.hpp"

namespace facering {

namespace {

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> out;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d != n / d) out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime(long p) { return p >= 2 && prime_factors(p) == std::vector<long>{p}; }

}  // namespace

int mobius(long n) {
  if (n < 1) throw InvalidInput("mobius needs n >= 1");
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  return n > 1 ? -sign : sign;
}

long euler_phi(long n) {
  if (n < 1) throw InvalidInput("euler_phi needs n >= 1");
  long phi = n;
  for (const long p : prime_factors(n)) phi = phi / p * (p - 1);
  return phi;
}

IntPolynomial cyclotomic_polynomial(long n) {
  if (n < 1) throw InvalidInput("cyclotomic_polynomial needs n >= 1");
  if (n > 1000000) throw GuardExceeded("n <= 10^6", "cyclotomic polynomial refused for n = " + std::to_string(n));
  if (n == 1) return IntPolynomial{-1, 1};
  // Φ_n = Π_{d|n} (1 - x^d)^μ(n/d) for n > 1, as a power series cut at degree φ(n).
  const auto len = static_cast<std::size_t>(euler_phi(n)) + 1;
  std::vector<BigInt> c(len);
  c[0] = 1;
  const auto divs = divisors(n);
  for (const long d : divs) {
    if (mobius(n / d) != 1) continue;
    for (std::size_t k = len; k-- > static_cast<std::size_t>(d);) c[k] -= c[k - static_cast<std::size_t>(d)];
  }
  for (const long d : divs) {
    if (mobius(n / d) != -1) continue;
    for (std::size_t k = static_cast<std::size_t>(d); k < len; ++k) c[k] += c[k - static_cast<std::size_t>(d)];
  }
  return IntPolynomial(std::move(c));
}

std::string_view to_string(ResidueLabeling labeling) {
  switch (labeling) {
    case ResidueLabeling::kZeroBased: return "zero";
    case ResidueLabeling::kOneBased: return "one";
    case ResidueLabeling::kTruncated: return "truncated";
  }
  return "zero";
}

ResidueLabeling parse_labeling(std::string_view text) {
  for (const auto l : kAllLabelings) {
    if (to_string(l) == text) return l;
  }
  throw InvalidInput("unknown labeling '" + std::string(text) + "' (expected zero, one or truncated)");
}

CyclotomicSpec::CyclotomicSpec(std::vector<long> p, ResidueLabeling l) : primes(std::move(p)), labeling(l) {
  std::sort(primes.begin(), primes.end());
  if (primes.size() < 2) throw InvalidInput("need at least two primes");
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) throw InvalidInput("primes must be distinct");
  for (const long q : primes) {
    if (!is_prime(q)) throw InvalidInput(std::to_string(q) + " is not prime");
  }
}

long CyclotomicSpec::n() const {
  long n = 1;
  for (const long p : primes) n *= p;
  return n;
}

std::string CyclotomicSpec::vertex_label(int group, long residue) const {
  long total = 0;
  for (const long p : primes) total += p;
  if (total <= 26) {
    long offset = 0;
    for (int i = 0; i < group; ++i) offset += primes[static_cast<std::size_t>(i)];
    return std::string(1, static_cast<char>('a' + offset + residue));
  }
  std::string r = std::to_string(residue);
  const std::size_t width = std::to_string(primes[static_cast<std::size_t>(group)] - 1).size();
  return "g" + std::to_string(group + 1) + "_" + std::string(width - r.size(), '0') + r;
}

LabelSet CyclotomicSpec::vertex_labels() const {
  LabelSet out;
  for (int i = 0; i < d(); ++i) {
    for (long k = 0; k < primes[static_cast<std::size_t>(i)]; ++k) out.push_back(vertex_label(i, k));
  }
  return out;
}

LabelSet facet_of_residue(const CyclotomicSpec& spec, long j) {
  if (j < 0 || j >= spec.n()) {
    throw InvalidInput("residue " + std::to_string(j) + " outside [0, " + std::to_string(spec.n() - 1) + "]");
  }
  LabelSet out;
  for (int i = 0; i < spec.d(); ++i) out.push_back(spec.vertex_label(i, j % spec.primes[static_cast<std::size_t>(i)]));
  return out;
}

std::vector<long> selected_residues(const CyclotomicSpec& spec, std::span<const long> a) {
  const long n = spec.n();
  const long phi = euler_phi(n);
  std::set<long> labels;
  for (const long x : a) {
    if (x < 0 || x > phi) {
      throw InvalidInput("A must be a subset of {0, ..., " + std::to_string(phi) + "}; got " + std::to_string(x));
    }
    labels.insert(x);
  }
  const long tail_end = spec.labeling == ResidueLabeling::kTruncated ? n - 1 : n;
  for (long x = phi + 1; x <= tail_end; ++x) labels.insert(x);
  std::set<long> residues;
  for (const long x : labels) {
    residues.insert(spec.labeling == ResidueLabeling::kOneBased ? ((x - 1) % n + n) % n : x % n);
  }
  return {residues.begin(), residues.end()};
}

SimplicialComplex build_K_A(const CyclotomicSpec& spec, std::span<const long> a) {
  const LabelSet labels = spec.vertex_labels();
  std::vector<VertexMask> groups;
  int offset = 0;
  for (const long p : spec.primes) {
    groups.push_back(full_mask(static_cast<int>(p)) << offset);
    offset += static_cast<int>(p);
  }
  std::set<VertexMask> facets;
  for (const long r : selected_residues(spec, a)) {
    VertexMask m = 0;
    int base = 0;
    for (const long p : spec.primes) {
      m |= bit(base + static_cast<int>(r % p));
      base += static_cast<int>(p);
    }
    facets.insert(m);
  }
  const int d = spec.d();
  return SimplicialComplex::from_face_predicate(labels, [&](VertexMask m) {
    for (const VertexMask g : groups) {
      if (cardinality(m & g) > 1) return false;
    }
    return cardinality(m) < d || facets.count(m) > 0;
  });
}

namespace {

nlohmann::json homology_json(const std::vector<HomologyGroup>& groups) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : groups) {
    nlohmann::json torsion = nlohmann::json::array();
    for (const auto& t : g.torsion) torsion.push_back(t.get_str());
    out.push_back({{"degree", g.degree}, {"betti", g.betti}, {"torsion", torsion}});
  }
  return out;
}

CheckReport combine(std::string name, std::vector<CheckReport> children) {
  CheckReport report = CheckReport::fail(std::move(name), "");
  std::string mismatches;
  for (const auto& c : children) {
    if (c.passed()) report.verdict = Verdict::kPass;
    else mismatches += (mismatches.empty() ? "" : "; ") + c.name + ": " + c.witness;
  }
  if (!report.passed()) report.witness = "no labeling matches (" + mismatches + ")";
  report.children = std::move(children);
  return report;
}

void check_j(const CyclotomicSpec& spec, long j) {
  const long phi = euler_phi(spec.n());
  if (j < 0 || j > phi) throw InvalidInput("j must lie in [0, " + std::to_string(phi) + "]");
}

}  // namespace

CheckReport check_cycltop(const CyclotomicSpec& spec, long j, std::span<const ResidueLabeling> labelings) {
  check_j(spec, j);
  const BigInt cj = cyclotomic_polynomial(spec.n()).coeff(static_cast<int>(j));
  const int d = spec.d();
  std::vector<CheckReport> children;
  for (const auto labeling : labelings) {
    CyclotomicSpec local = spec;
    local.labeling = labeling;
    const long single[] = {j};
    const SimplicialComplex k = build_K_A(local, single);
    const auto homology = reduced_homology(k);

    CheckReport sub = CheckReport::pass(std::string(to_string(labeling)));
    sub.details["facets"] = k.facets().size();
    sub.details["homology"] = homology_json(homology);
    sub.details["top_h_identity"] = std::string(to_string(check_top_h_identity(k).verdict));
    for (const auto& g : homology) {
      long want_betti = 0;
      std::vector<BigInt> want_torsion;
      if (g.degree == d - 2) {
        if (cj == 0) want_betti = 1;
        else if (abs(cj) > 1) want_torsion.push_back(abs(cj));
      }
      if (g.degree == d - 1 && cj == 0) want_betti = 1;
      if (g.betti != want_betti || g.torsion != want_torsion) {
        sub.verdict = Verdict::kFail;
        std::string torsion;
        for (const auto& t : g.torsion) torsion += " Z/" + t.get_str();
        sub.witness = "degree " + std::to_string(g.degree) + ": rank " + std::to_string(g.betti) +
                      (torsion.empty() ? ", no torsion" : ", torsion" + torsion);
        break;
      }
    }
    children.push_back(std::move(sub));
  }
  CheckReport report = combine("cycltop", std::move(children));
  report.details["n"] = spec.n();
  report.details["j"] = j;
  report.details["c_j"] = cj.get_str();
  report.details["expected_torsion_order"] = abs(cj) > 1 ? BigInt(abs(cj)).get_str() : "1";
  return report;
}

CheckReport check_cyclcheck(const CyclotomicSpec& spec, long j, std::span<const ResidueLabeling> labelings) {
  check_j(spec, j);
  const BigInt cj = cyclotomic_polynomial(spec.n()).coeff(static_cast<int>(j));
  const int d = spec.d();
  const int sign = d % 2 == 0 ? 1 : -1;
  const BigInt expected = cj == 0 ? BigInt(1 + sign) : BigInt(sign);
  std::vector<CheckReport> children;
  for (const auto labeling : labelings) {
    CyclotomicSpec local = spec;
    local.labeling = labeling;
    const long single[] = {j};
    const SimplicialComplex t = build_K_A(local, single);
    const int n_s = t.vertex_count() + 1;
    const IntPolynomial chi = chromatic_from_auxiliary(t, n_s);
    const HVector h = h_vector(t);
    const CheckReport identity = check_top_h_identity(t);

    CheckReport sub = CheckReport::pass(std::string(to_string(labeling)));
    sub.details["h_d"] = h.entries.back().get_str();
    sub.details["expected_h_d"] = expected.get_str();
    sub.details["literal_constant_term"] = chi.coeff(0).get_str();
    sub.details["chi_c"] = to_string(chi);
    sub.details["n_S"] = n_s;
    sub.details["r_S"] = t.minimal_nonfaces().size();
    if (h.entries.back() != expected) {
      sub.verdict = Verdict::kFail;
      sub.witness = "h_d = " + h.entries.back().get_str() + ", expected " + expected.get_str();
    }
    sub.children.push_back(identity);
    children.push_back(std::move(sub));
  }
  CheckReport report = combine("cyclcheck", std::move(children));
  report.details["n"] = spec.n();
  report.details["j"] = j;
  report.details["c_j"] = cj.get_str();
  report.details["d"] = d;
  return report;
}

}  // namespace facering
