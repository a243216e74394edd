#include <random>

#include "doctest.h"
#include "facering/analysis.hpp"
#include "facering/cyclotomic.hpp"
#include "facering/errors.hpp"
#include "facering/homology.hpp"
#include "facering/random_complex.hpp"
#include "oracles.hpp"

using namespace facering;

namespace {

IntegerMatrix matrix(std::vector<std::vector<long>> rows) {
  IntegerMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<long> longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % 19) - 9;
  }
  return m;
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("boundary matrices") {
    const auto tri = SimplicialComplex::from_facets({"1", "2", "3"}, std::vector<LabelSet>{{"1", "2"}, {"1", "3"}, {"2", "3"}});
    const IntegerMatrix d1 = boundary_matrix(tri, 1);
    CHECK(d1.rows() == 3);
    CHECK(d1.cols() == 3);
    for (std::size_t c = 0; c < 3; ++c) {
      int plus = 0;
      int minus = 0;
      for (std::size_t r = 0; r < 3; ++r) {
        plus += d1(r, c) == 1;
        minus += d1(r, c) == -1;
      }
      CHECK(plus == 1);
      CHECK(minus == 1);
    }
    const auto pts = SimplicialComplex::from_facets({"1", "2"}, std::vector<LabelSet>{{"1"}, {"2"}});
    const IntegerMatrix d0 = boundary_matrix(pts, 0);
    CHECK(d0.rows() == 1);
    CHECK(d0.cols() == 2);
    CHECK(d0(0, 0) == 1);
    CHECK(d0(0, 1) == 1);
    const IntegerMatrix d2 = boundary_matrix(octahedron_boundary(), 2);
    CHECK(d2.rows() == 12);
    CHECK(d2.cols() == 8);
    CHECK_THROWS_AS(boundary_matrix(tri, 2), InvalidInput);
  }

  TEST_CASE("smith normal form examples") {
    CHECK(longs(smith_normal_form(matrix({{1, 0}, {0, 1}}))) == std::vector<long>{1, 1});
    CHECK(longs(smith_normal_form(matrix({{2, 4}, {0, 6}}))) == std::vector<long>{2, 6});
    CHECK(smith_normal_form(matrix({{0, 0}, {0, 0}})).empty());
    CHECK(longs(smith_normal_form(matrix({{2, 0}, {0, 3}}))) == std::vector<long>{1, 6});
    CHECK(smith_normal_form(IntegerMatrix(0, 4)).empty());
    CHECK_THROWS_AS(smith_normal_form(IntegerMatrix(501, 501)), GuardExceeded);
  }

  TEST_CASE("property: smith normal form against determinantal divisors") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 1 + rng() % 4;
      IntegerMatrix m = random_matrix(rng, rows, cols);
      std::vector<std::vector<BigInt>> dense(rows, std::vector<BigInt>(cols));
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) dense[i][j] = m(i, j);
      }
      CHECK(smith_normal_form(m) == oracle::invariant_factors(dense));
    }
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t k = 1 + rng() % 8;
      IntegerMatrix m = random_matrix(rng, k, 1 + rng() % 8);
      const auto inv = smith_normal_form(m);
      for (std::size_t i = 0; i + 1 < inv.size(); ++i) {
        CHECK(inv[i] > 0);
        CHECK(inv[i + 1] % inv[i] == 0);
      }
    }
  }

  TEST_CASE("reduced homology examples") {
    const auto tri = SimplicialComplex::from_facets({"1", "2", "3"}, std::vector<LabelSet>{{"1", "2"}, {"1", "3"}, {"2", "3"}});
    const auto h = reduced_homology(tri);
    REQUIRE(h.size() == 3);
    CHECK(h[0].degree == -1);
    CHECK(h[0].betti == 0);
    CHECK(h[1].betti == 0);
    CHECK(h[2].betti == 1);
    const auto pts = reduced_homology(SimplicialComplex::from_facets({"1", "2"}, std::vector<LabelSet>{{"1"}, {"2"}}));
    CHECK(pts[1].degree == 0);
    CHECK(pts[1].betti == 1);
    const auto empty = reduced_homology(SimplicialComplex{});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].betti == 1);
    CHECK(reduced_homology(octahedron_boundary())[3].betti == 1);
  }

  TEST_CASE("K_{7} in K_{3,5,7} carries Z/2 in degree 1 under the truncated labeling") {
    const long a[] = {7};
    const auto k = build_K_A(CyclotomicSpec({3, 5, 7}, ResidueLabeling::kTruncated), a);
    const auto h = reduced_homology(k);
    CHECK(h[2].degree == 1);
    CHECK(h[2].betti == 0);
    CHECK(longs(h[2].torsion) == std::vector<long>{2});
    CHECK(h[3].betti == 0);
    CHECK(-cyclotomic_polynomial(105).coeff(7) == 2);
  }

  TEST_CASE("property: boundary squares to zero and Euler consistency") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
      RandomComplexOptions o;
      o.vertices = 1 + static_cast<int>(rng() % 7);
      const auto s = random_complex(rng, o);
      for (int k = 0; k + 1 <= s.dimension(); ++k) {
        CHECK((boundary_matrix(s, k) * boundary_matrix(s, k + 1)).is_zero());
      }
      BigInt alt = 0;
      for (const auto& g : reduced_homology(s)) {
        alt += (g.degree % 2 == 0 ? 1 : -1) * BigInt(g.betti);
      }
      CHECK(alt == euler_characteristics(s).reduced_chi);
    }
  }
}
