#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "facering/auxiliary.hpp"
#include "facering/chromatic.hpp"
#include "facering/cyclotomic.hpp"
#include "facering/errors.hpp"
#include "facering/hilbert.hpp"
#include "oracles.hpp"

using namespace facering;

TEST_SUITE("cyclotomic") {
  TEST_CASE("arithmetic functions") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(105) == 48);
    CHECK(euler_phi(15) == 8);
  }

  TEST_CASE("cyclotomic polynomial examples") {
    CHECK(cyclotomic_polynomial(1) == IntPolynomial{-1, 1});
    CHECK(cyclotomic_polynomial(6) == IntPolynomial{1, -1, 1});
    CHECK(cyclotomic_polynomial(15) == IntPolynomial{1, -1, 0, 1, -1, 1, 0, -1, 1});
    CHECK(cyclotomic_polynomial(105).coeff(7) == -2);
    CHECK(to_string(cyclotomic_polynomial(6), "x") == "x^2 - x + 1");
    CHECK_THROWS_AS(cyclotomic_polynomial(0), InvalidInput);
    CHECK_THROWS_AS(cyclotomic_polynomial(1000001), GuardExceeded);
  }

  TEST_CASE("property: divisor products and the recursive oracle") {
    for (long n = 1; n <= 200; ++n) {
      IntPolynomial prod{1};
      for (long d = 1; d <= n; ++d) {
        if (n % d == 0) prod = prod * cyclotomic_polynomial(d);
      }
      CHECK(prod == IntPolynomial::monomial(1, static_cast<int>(n)) - IntPolynomial{1});
      if (n <= 60) CHECK(cyclotomic_polynomial(n) == oracle::cyclotomic(n));
    }
  }

  TEST_CASE("specs and labels") {
    const CyclotomicSpec s({3, 2});
    CHECK(s.primes == std::vector<long>{2, 3});
    CHECK(s.n() == 6);
    CHECK(s.vertex_labels() == LabelSet{"a", "b", "c", "d", "e"});
    CHECK(facet_of_residue(s, 5) == LabelSet{"b", "e"});
    CHECK(facet_of_residue(s, 0) == LabelSet{"a", "c"});
    const CyclotomicSpec big({3, 5, 7});
    CHECK(facet_of_residue(big, 7) == LabelSet{big.vertex_label(0, 1), big.vertex_label(1, 2), big.vertex_label(2, 0)});
    CHECK_THROWS_AS(CyclotomicSpec({2, 2}), InvalidInput);
    CHECK_THROWS_AS(CyclotomicSpec({4, 3}), InvalidInput);
    CHECK_THROWS_AS(CyclotomicSpec({5}), InvalidInput);
    CHECK(parse_labeling("truncated") == ResidueLabeling::kTruncated);
    CHECK_THROWS_AS(parse_labeling("two"), InvalidInput);
  }

  TEST_CASE("K_A for primes (2,3)") {
    const long a[] = {1};
    const auto k = build_K_A(CyclotomicSpec({2, 3}), a);
    CHECK(k.vertex_count() == 5);
    CHECK(k.facets().size() == 5);
    CHECK(k.minimal_nonfaces().size() == 5);
    const auto& gens = k.minimal_nonfaces().generators();
    CHECK(std::find(gens.begin(), gens.end(), k.mask_of({"a", "e"})) != gens.end());

    const long all[] = {0, 1, 2};
    CHECK(build_K_A(CyclotomicSpec({2, 3}), all).facets().size() == 6);
    CHECK_THROWS_AS(build_K_A(CyclotomicSpec({2, 3}), std::vector<long>{3}), InvalidInput);
  }

  TEST_CASE("K_{7} for primes (3,5,7)") {
    const long a[] = {7};
    const auto k = build_K_A(CyclotomicSpec({3, 5, 7}), a);
    const auto f = k.f_vector();
    CHECK(f[1] == 15);
    CHECK(f[2] == 71);
    CHECK(f[3] == 58);
    CHECK(k.dimension() == 2);
  }

  TEST_CASE("property: K_A facet counts and the top-h identity") {
    const std::vector<std::vector<long>> specs = {{2, 3}, {2, 5}, {3, 5}, {2, 3, 5}};
    for (const auto& primes : specs) {
      for (const auto labeling : kAllLabelings) {
        const CyclotomicSpec spec(primes, labeling);
        const long phi = euler_phi(spec.n());
        for (long j = 0; j <= phi; ++j) {
          const long a[] = {j};
          const auto k = build_K_A(spec, a);
          CHECK(k.vertex_count() == std::accumulate(primes.begin(), primes.end(), 0L));
          CHECK(k.dimension() == spec.d() - 1);
          const auto residues = selected_residues(spec, a);
          CHECK(static_cast<long>(k.faces_of_size(spec.d()).size()) == static_cast<long>(residues.size()));
          CHECK(check_top_h_identity(k).passed());
        }
      }
    }
  }

  TEST_CASE("cycltop") {
    const CheckReport r = check_cycltop(CyclotomicSpec({3, 5, 7}), 7);
    CHECK(r.details["c_j"] == "-2");
    REQUIRE(r.children.size() == 3);
    CHECK_FALSE(r.children[0].passed());
    CHECK_FALSE(r.children[1].passed());
    CHECK(r.children[2].passed());
    CHECK(r.passed());

    const CheckReport small = check_cycltop(CyclotomicSpec({2, 3}), 1);
    CHECK(small.details["c_j"] == "-1");
    CHECK_FALSE(small.children[0].passed());
    CHECK(small.children[2].passed());
    CHECK_THROWS_AS(check_cycltop(CyclotomicSpec({2, 3}), 3), InvalidInput);

    const auto phi6 = cyclotomic_polynomial(6);
    for (int j = 0; j <= 2; ++j) CHECK(phi6.coeff(j) != 0);
  }

  TEST_CASE("cyclcheck") {
    const CheckReport r = check_cyclcheck(CyclotomicSpec({3, 5, 7}), 7);
    CHECK_FALSE(r.passed());
    CHECK(r.children[0].details["h_d"] == "1");
    CHECK(r.children[2].details["h_d"] == "0");
    CHECK(r.children[0].details["expected_h_d"] == "-1");
    for (const auto& c : r.children) CHECK(c.details["literal_constant_term"] == "0");

    // Φ15: zero coefficients exactly at 2 and 6, which flips the expected value.
    const auto phi15 = cyclotomic_polynomial(15);
    for (long j = 0; j <= 8; ++j) {
      const CheckReport c = check_cyclcheck(CyclotomicSpec({3, 5}), j);
      CHECK(c.children[0].details["expected_h_d"] == (phi15.coeff(static_cast<int>(j)) == 0 ? "2" : "1"));
    }
  }

  TEST_CASE("K-identity route agrees with direct enumeration on primes (2,3)") {
    for (long j = 0; j <= 2; ++j) {
      for (const auto labeling : kAllLabelings) {
        const long a[] = {j};
        const auto t = build_K_A(CyclotomicSpec({2, 3}, labeling), a);
        const Lift lift = lift_with_apex(t);
        CHECK(chromatic_from_auxiliary(t, lift.complex.vertex_count()) == chromatic_polynomial(lift.complex));
      }
    }
  }
}
