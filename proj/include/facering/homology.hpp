#pragma once

#include <vector>

#include "facering/bigint.hpp"
#include "facering/complex.hpp"

namespace facering {

/// Dense integer matrix, row major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

/// ∂_k from k-faces (k+1 vertices) to (k-1)-faces, faces in lexicographic
/// order, coefficient (-1)^position of the removed vertex. ∂_0 maps every
/// vertex to the empty face. Requires 0 <= k <= dim and at most 5000
/// faces in either degree.
IntegerMatrix boundary_matrix(const SimplicialComplex& s, int k);

/// Nonzero invariant factors d_1 | d_2 | ... (length = rank).
/// Refuses min(rows, cols) > 500.
std::vector<BigInt> smith_normal_form(IntegerMatrix m);

struct HomologyGroup {
  int degree = 0;
  long betti = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
};

/// Reduced integer homology in degrees -1 .. dim.
std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& s);

}  // namespace facering
