#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "facering/bigint.hpp"
#include "facering/check_report.hpp"
#include "facering/errors.hpp"

namespace facering {

/// Exact univariate polynomial with integer coefficients, stored
/// ascending (index = degree). The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial monomial(const BigInt& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest degree with a nonzero coefficient; -1 for zero.
  int low_degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;

  BigInt evaluate(const BigInt& x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator-(IntPolynomial a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

class InexactDivision : public Error {
 public:
  explicit InexactDivision(IntPolynomial remainder);
  const IntPolynomial& remainder() const { return remainder_; }

 private:
  IntPolynomial remainder_;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// Integer long division. Stops early when the leading coefficient of the
/// divisor does not divide the running remainder's, so `remainder` may
/// have degree >= deg(divisor) in that case.
DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& divisor);
/// Throws InexactDivision when the remainder is nonzero.
IntPolynomial exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

IntPolynomial pow(const IntPolynomial& p, unsigned exponent);

/// t^n · p(1/t). Requires n >= deg p.
IntPolynomial reciprocal(const IntPolynomial& p, int n);
/// p(t + c).
IntPolynomial translate(const IntPolynomial& p, const BigInt& c);
/// p(t - 1).
inline IntPolynomial substitute_shift(const IntPolynomial& p) { return translate(p, -1); }

/// Descending-degree rendering, e.g. "t^4 - 6*t^3 + 11*t^2 - 6*t".
std::string to_string(const IntPolynomial& p, std::string_view var = "t");

enum class LogConcavityMode { kSigned, kAbsolute };
std::string_view to_string(LogConcavityMode mode);

/// e_{i-1} e_{i+1} <= e_i^2 for every interior i of [lo, hi].
CheckReport is_log_concave(std::span<const BigInt> seq, std::size_t lo, std::size_t hi,
                           LogConcavityMode mode = LogConcavityMode::kSigned);
inline CheckReport is_log_concave(std::span<const BigInt> seq,
                                  LogConcavityMode mode = LogConcavityMode::kSigned) {
  return is_log_concave(seq, 0, seq.empty() ? 0 : seq.size() - 1, mode);
}

struct IndexWindow {
  std::size_t lo = 0;
  std::size_t hi = 0;
};
/// Longest contiguous window on which the sequence is log concave
/// (the leftmost one on ties).
IndexWindow largest_log_concave_window(std::span<const BigInt> seq,
                                       LogConcavityMode mode = LogConcavityMode::kSigned);

/// b_{lo+i} == sign · b_{hi-i} over the window between the lowest and
/// highest nonzero coefficients.
CheckReport is_signed_palindrome(const IntPolynomial& p, int sign);

/// All coefficients nonnegative and the degree-1 and degree-2 coefficients >= 3.
CheckReport brenti_criterion(const IntPolynomial& p);

}  // namespace facering
