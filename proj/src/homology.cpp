#include "facering/homology.hpp"

#include <algorithm>
#include <map>

#include "facering/errors.hpp"

namespace facering {

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product: dimension mismatch");
  IntegerMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxFaces = 5000;
constexpr std::size_t kMaxSnfDimension = 500;

std::vector<VertexMask> guarded_faces(const SimplicialComplex& s, int size) {
  auto faces = s.faces_of_size(size);
  if (faces.size() > kMaxFaces) {
    throw GuardExceeded("faces per degree <= 5000",
                        std::to_string(faces.size()) + " faces of size " + std::to_string(size));
  }
  return faces;
}

}  // namespace

IntegerMatrix boundary_matrix(const SimplicialComplex& s, int k) {
  if (k < 0 || k > s.dimension()) {
    throw InvalidInput("boundary_matrix: k = " + std::to_string(k) + " outside [0, " +
                       std::to_string(s.dimension()) + "]");
  }
  const auto cols = guarded_faces(s, k + 1);
  const auto rows = guarded_faces(s, k);
  std::map<VertexMask, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
  IntegerMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int position = 0;
    for (const int v : indices_of(cols[c])) {
      m(row_index.at(cols[c] & ~bit(v)), c) = position % 2 == 0 ? 1 : -1;
      ++position;
    }
  }
  return m;
}

std::vector<BigInt> smith_normal_form(IntegerMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (std::min(rows, cols) > kMaxSnfDimension) {
    throw GuardExceeded("matrix dimension <= 500", "Smith normal form refused for a " + std::to_string(rows) +
                                                       "x" + std::to_string(cols) + " matrix");
  }
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block.
      std::size_t pr = rows;
      std::size_t pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) != 0 && (pr == rows || abs(m(i, j)) < abs(m(pr, pc)))) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return diag;
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(t, j), m(pr, j));
      for (std::size_t i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pc));

      bool clean = true;
      const BigInt pivot = m(t, t);
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) == 0) continue;
        const BigInt q = m(i, t) / pivot;
        for (std::size_t j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) == 0) continue;
        const BigInt q = m(t, j) / pivot;
        for (std::size_t i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold in any entry the pivot does not divide.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % pivot != 0) {
            for (std::size_t c = t; c < cols; ++c) m(t, c) += m(i, c);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diag.push_back(abs(m(t, t)));
  }
  return diag;
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& s) {
  const int dim = s.dimension();
  // invariants[k + 1] belongs to ∂_k; ∂_{-1} and ∂_{dim+1} are zero.
  std::vector<std::vector<BigInt>> invariants(static_cast<std::size_t>(dim) + 3);
  for (int k = 0; k <= dim; ++k) {
    invariants[static_cast<std::size_t>(k) + 1] = smith_normal_form(boundary_matrix(s, k));
  }
  const auto f = s.f_vector();
  std::vector<HomologyGroup> out;
  for (int k = -1; k <= dim; ++k) {
    const auto& down = invariants[static_cast<std::size_t>(k) + 1];
    const auto& up = invariants[static_cast<std::size_t>(k) + 2];
    HomologyGroup g;
    g.degree = k;
    g.betti = f[static_cast<std::size_t>(k) + 1].get_si() - static_cast<long>(down.size()) -
              static_cast<long>(up.size());
    for (const auto& d : up) {
      if (d > 1) g.torsion.push_back(d);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace facering
