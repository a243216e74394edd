#include "facering/io.hpp"

#include <fstream>
#include <sstream>

#include "facering/errors.hpp"

namespace facering {

namespace {

[[noreturn]] void fail_at(const std::string& source, const std::string& path, const std::string& message) {
  throw InvalidInput(source + ": " + (path.empty() ? "/" : path) + ": " + message);
}

LabelSet labels_at(const nlohmann::json& node, const std::string& source, const std::string& path) {
  if (!node.is_array()) fail_at(source, path, "expected an array of strings");
  LabelSet out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string()) fail_at(source, path + "/" + std::to_string(i), "expected a string label");
    out.push_back(node[i].get<std::string>());
  }
  return out;
}

std::vector<LabelSet> label_sets_at(const nlohmann::json& node, const std::string& source, const std::string& path) {
  if (!node.is_array()) fail_at(source, path, "expected an array of label arrays");
  std::vector<LabelSet> out;
  for (std::size_t i = 0; i < node.size(); ++i) out.push_back(labels_at(node[i], source, path + "/" + std::to_string(i)));
  return out;
}

template <class F>
auto with_context(const std::string& source, const std::string& path, F&& build) {
  try {
    return build();
  } catch (const GuardExceeded&) {
    throw;
  } catch (const InvalidInput& e) {
    fail_at(source, path, e.what());
  }
}

}  // namespace

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

ComplexInput parse_complex(const nlohmann::json& doc, const std::string& source) {
  if (!doc.is_object()) fail_at(source, "", "expected a JSON object");
  const std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";

  if (doc.contains("graph_vertices")) {
    const LabelSet vertices = labels_at(doc["graph_vertices"], source, "/graph_vertices");
    if (!doc.contains("edges")) fail_at(source, "", "graph input needs \"edges\"");
    std::vector<std::pair<std::string, std::string>> edges;
    const auto sets = label_sets_at(doc["edges"], source, "/edges");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (sets[i].size() != 2) fail_at(source, "/edges/" + std::to_string(i), "an edge has exactly two endpoints");
      edges.emplace_back(sets[i][0], sets[i][1]);
    }
    Graph g = with_context(source, "/edges", [&] { return Graph(vertices, edges); });
    SimplicialComplex s = with_context(source, "", [&] { return complex_of_graph(g); });
    return {std::move(s), name, std::move(g)};
  }

  if (!doc.contains("vertices")) fail_at(source, "", "missing \"vertices\"");
  const LabelSet vertices = labels_at(doc["vertices"], source, "/vertices");
  const bool has_facets = doc.contains("facets");
  const bool has_nonfaces = doc.contains("minimal_nonfaces");
  if (has_facets == has_nonfaces) {
    fail_at(source, "", "give exactly one of \"facets\" and \"minimal_nonfaces\"");
  }
  if (has_facets) {
    const auto facets = label_sets_at(doc["facets"], source, "/facets");
    return {with_context(source, "/facets", [&] { return SimplicialComplex::from_facets(vertices, facets); }), name,
            std::nullopt};
  }
  const auto gens = label_sets_at(doc["minimal_nonfaces"], source, "/minimal_nonfaces");
  return {with_context(source, "/minimal_nonfaces",
                       [&] { return SimplicialComplex::from_minimal_nonfaces(vertices, gens); }),
          name, std::nullopt};
}

ComplexInput read_complex_file(const std::string& path) { return parse_complex(read_json_file(path), path); }

nlohmann::json complex_to_json(const SimplicialComplex& s, const std::string& name) {
  nlohmann::json out;
  if (!name.empty()) out["name"] = name;
  out["vertices"] = s.labels();
  nlohmann::json facets = nlohmann::json::array();
  for (const VertexMask f : s.facets()) facets.push_back(s.labels_of(f));
  out["facets"] = facets;
  return out;
}

nlohmann::json polynomial_to_json(const IntPolynomial& p, std::string_view var) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) coeffs.push_back(c.get_si());
    else coeffs.push_back(c.get_str());
  }
  return {{"coeffs", coeffs}, {"text", to_string(p, var)}};
}

std::vector<AlphaAssignment::Pair> parse_alpha(const nlohmann::json& doc, const std::string& source) {
  if (doc.is_object() && doc.contains("alpha")) return parse_alpha(doc["alpha"], source);
  if (!doc.is_array()) fail_at(source, "", "expected an array of {\"sigma\", \"alpha\"} objects");
  std::vector<AlphaAssignment::Pair> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string path = "/" + std::to_string(i);
    const auto& item = doc[i];
    if (!item.is_object() || !item.contains("sigma") || !item.contains("alpha")) {
      fail_at(source, path, "expected an object with \"sigma\" and \"alpha\"");
    }
    out.push_back({labels_at(item["sigma"], source, path + "/sigma"), labels_at(item["alpha"], source, path + "/alpha")});
  }
  return out;
}

std::vector<AlphaAssignment::Pair> read_alpha_file(const std::string& path) {
  return parse_alpha(read_json_file(path), path);
}

nlohmann::json alpha_to_json(const AlphaAssignment& assign) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : assign.pairs()) out.push_back({{"sigma", p.sigma}, {"alpha", p.alpha}});
  return out;
}

}  // namespace facering
