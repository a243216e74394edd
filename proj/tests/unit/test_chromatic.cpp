#include <random>

#include "doctest.h"
#include "facering/chromatic.hpp"
#include "facering/errors.hpp"
#include "facering/random_complex.hpp"
#include "oracles.hpp"

using namespace facering;

namespace {

SimplicialComplex by_nonfaces(const LabelSet& labels, const std::vector<LabelSet>& gens) {
  return SimplicialComplex::from_minimal_nonfaces(labels, gens);
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::vector<std::pair<std::string, std::string>> edges;
  const LabelSet v = numbered_labels(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng() % 2) edges.emplace_back(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
  }
  return Graph(v, edges);
}

}  // namespace

TEST_SUITE("chromatic") {
  TEST_CASE("component counts") {
    CHECK(component_count(std::vector<VertexMask>{0b0101, 0b1010}) == 2);
    CHECK(component_count(std::vector<VertexMask>{0b011, 0b110}) == 1);
    CHECK(component_count(std::vector<VertexMask>{0b00011, 0b00110, 0b11000}) == 2);
    CHECK_THROWS_AS(component_count(std::vector<VertexMask>{}), InvalidInput);
  }

  TEST_CASE("worked values") {
    CHECK(chromatic_polynomial(full_simplex({"1", "2", "3"})) == IntPolynomial{0, 0, 0, 1});
    CHECK(chromatic_polynomial(complex_of_graph(Graph::complete(4))) == oracle::falling_factorial(4));

    const auto tri = by_nonfaces({"1", "2", "3"}, {{"1", "2", "3"}});
    const IntPolynomial expected{0, -1, 0, 1};
    CHECK(chromatic_polynomial(tri) == expected);
    for (std::uint64_t q = 0; q <= 4; ++q) {
      CHECK(finite_model_count(tri, q) == expected.evaluate(BigInt(static_cast<unsigned long>(q))));
    }
    CHECK(chromatic_polynomial(SimplicialComplex{}) == IntPolynomial{1});
  }

  TEST_CASE("finite model counts") {
    CHECK(finite_model_count(by_nonfaces({"1", "2", "3"}, {{"1", "2", "3"}}), 3) == 24);
    CHECK(finite_model_count(by_nonfaces({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}}), 2) == 4);
    CHECK(finite_model_count(full_simplex({"1", "2"}), 5) == 25);
    CHECK_THROWS_AS(finite_model_count(full_simplex(numbered_labels(9)), 10), GuardExceeded);
  }

  TEST_CASE("graph chromatic polynomials") {
    CHECK(graph_chromatic(Graph::complete(3)) == oracle::falling_factorial(3));
    const Graph path({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(graph_chromatic(path) == IntPolynomial{0, 1, -2, 1});
    CHECK(graph_chromatic(Graph(numbered_labels(4), {})) == IntPolynomial::monomial(1, 4));
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "a"}}), InvalidInput);
    CHECK_THROWS_AS(Graph({"a", "b"}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
    CHECK_THROWS_AS(Graph({"a"}, {{"a", "z"}}), InvalidInput);
    CHECK_THROWS_AS(graph_chromatic(Graph::complete(13)), GuardExceeded);
  }

  TEST_CASE("tidied contraction conventions") {
    const auto two = by_nonfaces({"1", "2"}, {{"1", "2"}});
    const VertexMask sigma = two.mask_of({"1", "2"});
    const auto merged = tidied_contraction(two, sigma, ContractionConvention::kMergeVertex);
    CHECK(merged.vertex_count() == 1);
    const auto removed = tidied_contraction(two, sigma, ContractionConvention::kRemoveOnly);
    CHECK(removed.vertex_count() == 0);
    CHECK_THROWS_AS(tidied_contraction(two, two.mask_of({"1"}), ContractionConvention::kMergeVertex), InvalidInput);

    const auto path = by_nonfaces({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    const auto pm = tidied_contraction(path, path.mask_of({"1", "2"}), ContractionConvention::kMergeVertex);
    CHECK(pm.labels() == LabelSet{"3", "v_12"});
    CHECK(pm.minimal_nonfaces().generators() == std::vector<VertexMask>{0b11});
  }

  TEST_CASE("addition-contraction residuals") {
    const auto two = by_nonfaces({"1", "2"}, {{"1", "2"}});
    const CheckReport r = verify_addition_contraction(two, two.mask_of({"1", "2"}));
    CHECK(r.passed());
    REQUIRE(r.children.size() == 2);
    CHECK(r.children[0].name == "merge_vertex");
    CHECK(r.children[0].details["residual"] == "0");
    CHECK(r.children[1].details["residual"] == "-t + 1");
    CHECK_FALSE(r.children[1].passed());
    CHECK_FALSE(verify_addition_contraction(two, two.mask_of({"1", "2"}), ContractionConvention::kRemoveOnly).passed());

    const auto path = by_nonfaces({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
    CHECK(verify_addition_contraction(path, path.mask_of({"1", "2"})).passed());
  }

  TEST_CASE("property: finite-model and graph oracles") {
    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int trial = 0; trial < 80; ++trial) {
      RandomComplexOptions o;
      o.vertices = 1 + static_cast<int>(rng() % 6);
      o.max_generators = 4;
      const auto s = random_complex(rng, o);
      const IntPolynomial p = chromatic_polynomial(s);
      CHECK(p == oracle::chromatic(s.vertex_count(), s.minimal_nonfaces().generators()));
      for (std::uint64_t q = 0; q <= static_cast<std::uint64_t>(s.vertex_count()) + 1; ++q) {
        CHECK(p.evaluate(BigInt(static_cast<unsigned long>(q))) == finite_model_count(s, q));
      }
      CHECK(p.coeff(s.vertex_count()) == 1);
      CHECK(p.evaluate(1) == (s.minimal_nonfaces().empty() ? 1 : 0));
      ++checked;
    }
    CHECK(checked >= 50);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 6));
      CHECK(chromatic_polynomial(complex_of_graph(g)) == graph_chromatic(g));
    }
  }

  TEST_CASE("property: pairwise intersecting nonfaces keep one component") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      RandomComplexOptions o;
      o.vertices = 3 + static_cast<int>(rng() % 5);
      o.max_generators = 5;
      o.pairwise_intersecting = true;
      const auto s = random_complex(rng, o);
      const auto& gens = s.minimal_nonfaces().generators();
      for (std::uint64_t m = 1; m < (std::uint64_t{1} << gens.size()); ++m) {
        std::vector<VertexMask> chosen;
        for (std::size_t k = 0; k < gens.size(); ++k) {
          if (m >> k & 1) chosen.push_back(gens[k]);
        }
        CHECK(component_count(chosen) == 1);
      }
    }
  }

  TEST_CASE("enumeration guard") {
    std::vector<LabelSet> gens;
    const LabelSet v = numbered_labels(14);
    for (int i = 0; i < 14; ++i) {
      for (int j = i + 1; j < 14 && gens.size() < 26; ++j) gens.push_back({v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]});
    }
    CHECK_THROWS_AS(chromatic_polynomial(by_nonfaces(v, gens)), GuardExceeded);
  }
}
