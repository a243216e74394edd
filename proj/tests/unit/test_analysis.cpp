#include <random>

#include "doctest.h"
#include "facering/analysis.hpp"
#include "facering/chromatic.hpp"
#include "facering/errors.hpp"
#include "facering/hilbert.hpp"
#include "facering/random_complex.hpp"
#include "oracles.hpp"

using namespace facering;

namespace {

std::vector<long> longs(const std::vector<BigInt>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

const CheckReport& child(const CheckReport& r, const std::string& name) {
  for (const auto& c : r.children) {
    if (c.name == name) return c;
  }
  FAIL("missing child " << name);
  return r;
}

SimplicialComplex points(int k) {
  std::vector<LabelSet> facets;
  for (const auto& v : numbered_labels(k)) facets.push_back({v});
  return SimplicialComplex::from_facets(numbered_labels(k), facets);
}

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("uniform matroids") {
    CHECK(longs(uniform_matroid_complex(4, 2).f_vector()) == std::vector<long>{1, 4, 6});
    const auto u96 = uniform_matroid_complex(9, 6);
    CHECK(u96.minimal_nonfaces().size() == 36);
    CHECK(longs(h_vector(u96).entries) == std::vector<long>{1, 3, 6, 10, 15, 21, 28});
    const Lift lift = lift_with_apex(u96);
    CHECK(lift.complex.vertex_count() == 10);
    for (const VertexMask g : lift.complex.minimal_nonfaces().generators()) {
      CHECK(cardinality(g) == 8);
      CHECK((g & bit(9)) != 0);
    }
    CHECK_THROWS_AS(uniform_matroid_complex(3, 4), InvalidInput);
    CHECK_THROWS_AS(uniform_matroid_complex(21, 2), InvalidInput);
  }

  TEST_CASE("octahedron") {
    const auto oct = octahedron_boundary();
    CHECK(is_octahedron(oct));
    CHECK(oct.dimension() == 2);
    CHECK(longs(oct.f_vector()) == std::vector<long>{1, 6, 12, 8});
    CHECK(longs(h_vector(oct).entries) == std::vector<long>{1, 3, 3, 1});
    CHECK(oct.labels_of(oct.minimal_nonfaces().generators()[0]) == LabelSet{"a", "c"});
    CHECK_FALSE(is_octahedron(points(6)));
  }

  TEST_CASE("log concavity reports") {
    const CheckReport u = log_concavity_report(uniform_matroid_complex(9, 6), std::nullopt);
    CHECK(child(u, "h_vector").passed());
    CHECK(child(u, "f_vector").passed());
    CHECK(child(u, "chi_c").verdict == Verdict::kNotApplicable);

    const Lift lift = lift_with_apex(uniform_matroid_complex(9, 6));
    const CheckReport l = log_concavity_report(lift.complex, lift.assignment);
    CHECK(child(l, "h_vector").passed());
    CHECK(child(l, "f_vector").witness.rfind("i=8", 0) == 0);
    CHECK(child(l, "chi_c").details["route"] == "auxiliary_K_identity");
    CHECK(child(l, "chi_c_shifted").witness.rfind("i=3", 0) == 0);

    CHECK(log_concavity_report(octahedron_boundary(), std::nullopt).children[0].passed());
  }

  TEST_CASE("Dehn-Sommerville") {
    CHECK(dehn_sommerville_check(octahedron_boundary()).passed());
    CHECK_FALSE(dehn_sommerville_check(points(3)).passed());
    CHECK(dehn_sommerville_check(points(2)).passed());
  }

  TEST_CASE("reciprocity") {
    const Lift dis = lift_disjoint(octahedron_boundary());
    const CheckReport r = reciprocity_report(dis.complex, dis.assignment);
    CHECK(r.passed());
    CHECK(r.details["chi_c"] == "t^9 - 3*t^7 + 3*t^5 - t^3");
    CHECK(r.details["sign"] == -1);
    const CheckReport& literal = child(r, "literal_t5_t3");
    CHECK_FALSE(literal.passed());
    CHECK(literal.details["b_5"] == "3");
    CHECK(literal.details["b_3"] == "-1");

    const Lift apex = lift_with_apex(octahedron_boundary());
    const CheckReport ra = reciprocity_report(apex.complex, apex.assignment);
    CHECK(ra.passed());
    CHECK(ra.details["chi_c"] == "t^7 - 3*t^5 + 3*t^3 - t");

    const Lift three = lift_with_apex(points(3));
    CHECK_FALSE(reciprocity_report(three.complex, three.assignment).passed());

    const auto sq = SimplicialComplex::from_minimal_nonfaces({"a", "b", "c", "d"}, std::vector<LabelSet>{{"a", "c"}, {"b", "d"}});
    CHECK(dehn_sommerville_check(sq).passed());
    const Lift sql = lift_with_apex(sq);
    const CheckReport rs = reciprocity_report(sql.complex, sql.assignment);
    CHECK(rs.passed());
    CHECK(rs.details["sign"] == 1);
  }

  TEST_CASE("property: shifted chi_c matches the alpha expansion") {
    std::mt19937_64 rng(66);
    for (int trial = 0; trial < 30; ++trial) {
      RandomComplexOptions o;
      o.vertices = 2 + static_cast<int>(rng() % 4);
      o.max_generators = 3;
      o.max_size = 3;
      const auto t = random_complex(rng, o);
      const Lift lift = lift_with_apex(t);
      const int n = lift.complex.vertex_count();
      const auto& alphas = lift.assignment.alphas();
      IntPolynomial expected;
      const IntPolynomial t_minus_1{-1, 1};
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << alphas.size()); ++m) {
        VertexMask u = 0;
        for (std::size_t k = 0; k < alphas.size(); ++k) {
          if (m >> k & 1) u |= alphas[k];
        }
        const IntPolynomial term = pow(t_minus_1, static_cast<unsigned>(n - cardinality(u)));
        expected = std::popcount(m) % 2 ? expected - term : expected + term;
      }
      CHECK(substitute_shift(chromatic_polynomial(lift.complex)) == expected);
    }
  }
}
