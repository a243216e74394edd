#pragma once

#include <optional>
#include <string>
#include <vector>

#include "facering/auxiliary.hpp"
#include "facering/chromatic.hpp"
#include "facering/complex.hpp"
#include "facering/polynomial.hpp"
#include "json.hpp"

namespace facering {

struct ComplexInput {
  SimplicialComplex complex;
  std::string name;
  std::optional<Graph> graph;  // set for graph input
};

/// Complex JSON ("vertices" with exactly one of "facets" / "minimal_nonfaces",
/// optional "name") or graph JSON ("graph_vertices", "edges").
/// Errors are InvalidInput naming `source` and the offending JSON path.
ComplexInput parse_complex(const nlohmann::json& doc, const std::string& source = "input");
ComplexInput read_complex_file(const std::string& path);

/// Canonical form: sorted vertices, lexicographically sorted facets.
nlohmann::json complex_to_json(const SimplicialComplex& s, const std::string& name = "");

nlohmann::json polynomial_to_json(const IntPolynomial& p, std::string_view var = "t");

/// Array of {"sigma": [...], "alpha": [...]}, bare or under an "alpha" key.
std::vector<AlphaAssignment::Pair> parse_alpha(const nlohmann::json& doc, const std::string& source = "input");
std::vector<AlphaAssignment::Pair> read_alpha_file(const std::string& path);
nlohmann::json alpha_to_json(const AlphaAssignment& assign);

/// Parses a file as JSON; syntax errors carry the byte offset.
nlohmann::json read_json_file(const std::string& path);

}  // namespace facering
