#include "facering/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "facering/errors.hpp"

namespace facering {

namespace {

void check_scan_guard(std::size_t n) {
  if (n > static_cast<std::size_t>(kMaxScanVertices)) {
    throw GuardExceeded("vertex count <= 25",
                        "complex has " + std::to_string(n) +
                            " vertices; exhaustive subset scans are limited to 25");
  }
}

void check_distinct(const LabelSet& labels) {
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvalidInput("duplicate vertex label '" + l + "'");
  }
}

VertexMask labels_to_mask(const LabelSet& universe, const LabelSet& subset, const char* what) {
  VertexMask m = 0;
  for (const auto& l : subset) {
    const auto it = std::find(universe.begin(), universe.end(), l);
    if (it == universe.end()) {
      throw InvalidInput(std::string(what) + " references unknown vertex '" + l + "'");
    }
    m |= bit(static_cast<int>(it - universe.begin()));
  }
  return m;
}

// Downward closure of a set family inside a 2^n table.
void close_downward(std::vector<char>& table, int n) {
  for (int i = 0; i < n; ++i) {
    const VertexMask b = bit(i);
    for (VertexMask m = 0; m < table.size(); ++m) {
      if ((m & b) && table[m]) table[m ^ b] = 1;
    }
  }
}

void close_upward(std::vector<char>& table, int n) {
  for (int i = 0; i < n; ++i) {
    const VertexMask b = bit(i);
    for (VertexMask m = 0; m < table.size(); ++m) {
      if (!(m & b) && table[m]) table[m | b] = 1;
    }
  }
}

std::vector<char> table_from_nonfaces(int n, std::span<const VertexMask> gens) {
  std::vector<char> nonface(std::size_t{1} << n, 0);
  for (const VertexMask g : gens) nonface[g] = 1;
  close_upward(nonface, n);
  for (auto& c : nonface) c = !c;
  return nonface;
}

VertexMask permute(VertexMask m, const std::vector<int>& new_index) {
  VertexMask out = 0;
  for (const int i : indices_of(m)) out |= bit(new_index[static_cast<std::size_t>(i)]);
  return out;
}

void sort_lex(std::vector<VertexMask>& v) { std::sort(v.begin(), v.end(), lex_less); }

}  // namespace

NonfaceFamily::NonfaceFamily(std::vector<VertexMask> generators)
    : generators_(std::move(generators)) {
  sort_lex(generators_);
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] == 0) throw InvalidInput("empty generator in nonface family");
    for (std::size_t j = 0; j < i; ++j) {
      if (is_subset(generators_[i], generators_[j]) || is_subset(generators_[j], generators_[i])) {
        throw InvalidInput("nonface generators do not form an antichain");
      }
    }
  }
}

VertexMask NonfaceFamily::support() const {
  return std::accumulate(generators_.begin(), generators_.end(), VertexMask{0},
                         [](VertexMask a, VertexMask b) { return a | b; });
}

SimplicialComplex::SimplicialComplex() : facets_{0} {}

SimplicialComplex::SimplicialComplex(LabelSet labels, std::vector<char> face_table,
                                     VertexPolicy policy)
    : policy_(policy) {
  const int n = static_cast<int>(labels.size());
  if (!face_table[0]) throw InvalidInput("the empty set must be a face");

  std::vector<VertexMask> facets;
  std::vector<VertexMask> nonfaces;
  for (VertexMask m = 0; m < face_table.size(); ++m) {
    if (face_table[m]) {
      bool maximal = true;
      for (int i = 0; i < n && maximal; ++i) {
        if (!(m & bit(i)) && face_table[m | bit(i)]) maximal = false;
      }
      if (maximal) facets.push_back(m);
    } else {
      bool minimal = true;
      for (VertexMask rest = m; rest != 0 && minimal; rest &= rest - 1) {
        if (!face_table[m ^ (rest & -rest)]) minimal = false;
      }
      if (minimal) nonfaces.push_back(m);
    }
  }
  if (policy == VertexPolicy::kRequireFaces) {
    for (int i = 0; i < n; ++i) {
      if (!face_table[bit(i)]) {
        throw InvalidInput("vertex '" + labels[static_cast<std::size_t>(i)] +
                           "' lies in no face");
      }
    }
  }

  // Canonical order: labels sorted, index sets remapped.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return labels[static_cast<std::size_t>(a)] < labels[static_cast<std::size_t>(b)];
  });
  std::vector<int> new_index(static_cast<std::size_t>(n));
  labels_.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    new_index[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
    labels_[static_cast<std::size_t>(k)] = labels[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
  }
  for (auto& f : facets) f = permute(f, new_index);
  for (auto& g : nonfaces) g = permute(g, new_index);
  sort_lex(facets);
  facets_ = std::move(facets);
  nonfaces_ = NonfaceFamily(std::move(nonfaces));
}

SimplicialComplex SimplicialComplex::from_facets(const LabelSet& labels,
                                                 const std::vector<LabelSet>& facets) {
  check_distinct(labels);
  std::vector<VertexMask> masks;
  masks.reserve(facets.size());
  for (const auto& f : facets) masks.push_back(labels_to_mask(labels, f, "facet"));
  return from_facets(labels, masks);
}

SimplicialComplex SimplicialComplex::from_facets(const LabelSet& labels,
                                                 std::span<const VertexMask> facets) {
  check_distinct(labels);
  check_scan_guard(labels.size());
  const int n = static_cast<int>(labels.size());
  std::vector<char> table(std::size_t{1} << n, 0);
  for (const VertexMask f : facets) {
    if (!is_subset(f, full_mask(n))) throw InvalidInput("facet references an unknown vertex");
    table[f] = 1;
  }
  table[0] = 1;
  close_downward(table, n);
  return SimplicialComplex(labels, std::move(table), VertexPolicy::kRequireFaces);
}

SimplicialComplex SimplicialComplex::from_minimal_nonfaces(const LabelSet& labels,
                                                           const std::vector<LabelSet>& generators,
                                                           VertexPolicy policy) {
  check_distinct(labels);
  std::vector<VertexMask> masks;
  masks.reserve(generators.size());
  for (const auto& g : generators) masks.push_back(labels_to_mask(labels, g, "minimal nonface"));
  return from_minimal_nonfaces(labels, masks, policy);
}

SimplicialComplex SimplicialComplex::from_minimal_nonfaces(const LabelSet& labels,
                                                           std::span<const VertexMask> generators,
                                                           VertexPolicy policy) {
  check_distinct(labels);
  check_scan_guard(labels.size());
  const int n = static_cast<int>(labels.size());
  for (const VertexMask g : generators) {
    if (!is_subset(g, full_mask(n))) throw InvalidInput("generator references an unknown vertex");
  }
  // Validates nonempty + antichain.
  const NonfaceFamily family(std::vector<VertexMask>(generators.begin(), generators.end()));
  return SimplicialComplex(labels, table_from_nonfaces(n, family.generators()), policy);
}

SimplicialComplex SimplicialComplex::from_face_predicate(
    const LabelSet& labels, const std::function<bool(VertexMask)>& is_face, VertexPolicy policy) {
  check_distinct(labels);
  check_scan_guard(labels.size());
  const int n = static_cast<int>(labels.size());
  std::vector<char> table(std::size_t{1} << n);
  for (VertexMask m = 0; m < table.size(); ++m) table[m] = is_face(m) ? 1 : 0;
  for (VertexMask m = 0; m < table.size(); ++m) {
    if (!table[m]) continue;
    for (VertexMask rest = m; rest != 0; rest &= rest - 1) {
      if (!table[m ^ (rest & -rest)]) throw InvalidInput("face predicate is not closed under subsets");
    }
  }
  return SimplicialComplex(labels, std::move(table), policy);
}

int SimplicialComplex::dimension() const {
  int best = 0;
  for (const VertexMask f : facets_) best = std::max(best, cardinality(f));
  return best - 1;
}

bool SimplicialComplex::is_face(VertexMask face) const {
  if (!is_subset(face, full_mask(vertex_count()))) return false;
  return std::none_of(nonfaces_.generators().begin(), nonfaces_.generators().end(),
                      [face](VertexMask g) { return is_subset(g, face); });
}

bool SimplicialComplex::is_face(const LabelSet& face) const { return is_face(mask_of(face)); }

int SimplicialComplex::index_of(const std::string& label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw InvalidInput("unknown vertex '" + label + "'");
  return static_cast<int>(it - labels_.begin());
}

VertexMask SimplicialComplex::mask_of(const LabelSet& labels) const {
  VertexMask m = 0;
  for (const auto& l : labels) m |= bit(index_of(l));
  return m;
}

LabelSet SimplicialComplex::labels_of(VertexMask mask) const {
  LabelSet out;
  for (const int i : indices_of(mask)) out.push_back(labels_[static_cast<std::size_t>(i)]);
  return out;
}

std::vector<VertexMask> SimplicialComplex::faces_of_size(int size) const {
  check_scan_guard(labels_.size());
  const int n = vertex_count();
  std::vector<VertexMask> out;
  if (size < 0 || size > n) return out;
  const auto table = table_from_nonfaces(n, nonfaces_.generators());
  for (VertexMask m = 0; m < table.size(); ++m) {
    if (table[m] && cardinality(m) == size) out.push_back(m);
  }
  sort_lex(out);
  return out;
}

std::vector<BigInt> SimplicialComplex::f_vector() const {
  check_scan_guard(labels_.size());
  const int n = vertex_count();
  const auto table = table_from_nonfaces(n, nonfaces_.generators());
  std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
  for (VertexMask m = 0; m < table.size(); ++m) {
    if (table[m]) ++counts[static_cast<std::size_t>(cardinality(m))];
  }
  const int top = dimension() + 1;
  std::vector<BigInt> f;
  for (int k = 0; k <= top; ++k) f.emplace_back(counts[static_cast<std::size_t>(k)]);
  return f;
}

EulerCharacteristics euler_characteristics(const SimplicialComplex& s) {
  const auto f = s.f_vector();
  BigInt chi = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (i % 2 == 1) chi += f[i];
    else chi -= f[i];
  }
  return {chi, chi - 1};
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  LabelSet labels = a.labels();
  for (const auto& l : b.labels()) {
    if (std::binary_search(a.labels().begin(), a.labels().end(), l)) {
      throw InvalidInput("join: label '" + l + "' appears in both complexes");
    }
    labels.push_back(l);
  }
  const int na = a.vertex_count();
  const VertexMask low = full_mask(na);
  const bool relaxed = a.policy() == VertexPolicy::kAllowNonfaceVertices ||
                       b.policy() == VertexPolicy::kAllowNonfaceVertices;
  return SimplicialComplex::from_face_predicate(
      labels,
      [&](VertexMask m) { return a.is_face(m & low) && b.is_face(m >> na); },
      relaxed ? VertexPolicy::kAllowNonfaceVertices : VertexPolicy::kRequireFaces);
}

SimplicialComplex skeleton(const SimplicialComplex& s, int k) {
  if (k < 0 || k > s.dimension()) {
    throw InvalidInput("skeleton: k = " + std::to_string(k) + " outside [0, " +
                       std::to_string(s.dimension()) + "]");
  }
  return SimplicialComplex::from_face_predicate(
      s.labels(), [&](VertexMask m) { return cardinality(m) <= k + 1 && s.is_face(m); },
      s.policy());
}

SimplicialComplex add_face(const SimplicialComplex& s, VertexMask face) {
  return SimplicialComplex::from_face_predicate(
      s.labels(), [&](VertexMask m) { return s.is_face(m) || is_subset(m, face); }, s.policy());
}

SimplicialComplex full_simplex(const LabelSet& labels) {
  return SimplicialComplex::from_face_predicate(labels, [](VertexMask) { return true; });
}

LabelSet numbered_labels(int n, const std::string& prefix) {
  const std::size_t width = std::to_string(n).size();
  LabelSet out;
  for (int i = 1; i <= n; ++i) {
    std::string digits = std::to_string(i);
    out.push_back(prefix + std::string(width - digits.size(), '0') + digits);
  }
  return out;
}

std::string fresh_label(const std::string& base, const LabelSet& taken) {
  std::string candidate = base;
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) candidate += '\'';
  return candidate;
}

}  // namespace facering
