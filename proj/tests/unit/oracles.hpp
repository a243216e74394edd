#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond the value types.

#include <functional>
#include <numeric>
#include <vector>

#include "facering/bigint.hpp"
#include "facering/polynomial.hpp"
#include "facering/vertex_set.hpp"

namespace oracle {

using facering::BigInt;
using facering::IntPolynomial;
using facering::VertexMask;

inline bool contains_generator(VertexMask m, const std::vector<VertexMask>& gens) {
  for (const VertexMask g : gens) {
    if ((g & m) == g) return true;
  }
  return false;
}

inline std::vector<long> face_counts(int n, const std::vector<VertexMask>& gens) {
  std::vector<long> counts(static_cast<std::size_t>(n) + 1, 0);
  for (VertexMask m = 0; m < (VertexMask{1} << n); ++m) {
    if (!contains_generator(m, gens)) ++counts[static_cast<std::size_t>(__builtin_popcountll(m))];
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

// Components of the intersection graph by breadth-first search.
inline int components(const std::vector<VertexMask>& sets) {
  std::vector<char> seen(sets.size(), 0);
  int count = 0;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.back();
      queue.pop_back();
      for (std::size_t v = 0; v < sets.size(); ++v) {
        if (!seen[v] && (sets[u] & sets[v])) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  return count;
}

inline IntPolynomial from_longs(const std::vector<long>& c) {
  std::vector<BigInt> v;
  for (const long x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

inline IntPolynomial chromatic(int n, const std::vector<VertexMask>& gens) {
  std::vector<long> acc(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << gens.size()); ++i) {
    std::vector<VertexMask> chosen;
    VertexMask uni = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (i >> k & 1) {
        chosen.push_back(gens[k]);
        uni |= gens[k];
      }
    }
    const int sign = chosen.size() % 2 == 0 ? 1 : -1;
    const int e = chosen.empty() ? n : n - __builtin_popcountll(uni) + components(chosen);
    acc[static_cast<std::size_t>(e)] += sign;
  }
  return from_longs(acc);
}

inline IntPolynomial k_polynomial(const std::vector<VertexMask>& gens) {
  std::vector<long> acc(65, 0);
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << gens.size()); ++i) {
    VertexMask uni = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (i >> k & 1) uni |= gens[k];
    }
    acc[static_cast<std::size_t>(__builtin_popcountll(uni))] += __builtin_popcountll(i) % 2 == 0 ? 1 : -1;
  }
  return from_longs(acc);
}

inline IntPolynomial falling_factorial(int n) {
  IntPolynomial p{1};
  for (int k = 0; k < n; ++k) p *= IntPolynomial{-k, 1};
  return p;
}

// Determinant by cofactor expansion (small matrices only).
inline BigInt det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    const BigInt term = m[0][c] * det(minor);
    if (c % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  if (k > n) return;
  while (true) {
    f(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
inline std::vector<BigInt> invariant_factors(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<BigInt> out;
  BigInt previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    BigInt g = 0;
    for_each_subset(rows, k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(cols, k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<BigInt>> sub;
        for (const auto r : rs) {
          std::vector<BigInt> row;
          for (const auto c : cs) row.push_back(m[r][c]);
          sub.push_back(row);
        }
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), BigInt(abs(det(sub))).get_mpz_t());
      });
    });
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

// Φ_n as (x^n - 1) divided by every Φ_d with d | n, d < n.
inline IntPolynomial cyclotomic(long n) {
  IntPolynomial p = IntPolynomial::monomial(1, static_cast<int>(n)) - IntPolynomial{1};
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) p = facering::exact_divide(p, cyclotomic(d));
  }
  return p;
}

}  // namespace oracle
