#include "facering/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace facering {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  for (const long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw InvalidInput("negative monomial degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPolynomial::low_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial operator-(IntPolynomial a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

InexactDivision::InexactDivision(IntPolynomial remainder)
    : Error("inexact polynomial division, remainder " + to_string(remainder)),
      remainder_(std::move(remainder)) {}

DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw InvalidInput("division by the zero polynomial");
  std::vector<BigInt> rem = dividend.coeffs();
  const int dq = divisor.degree();
  const BigInt& lead = divisor.coeffs().back();
  std::vector<BigInt> quot(rem.size() >= divisor.coeffs().size() ? rem.size() - divisor.coeffs().size() + 1 : 0);
  for (int k = static_cast<int>(rem.size()) - 1; k >= dq; --k) {
    const BigInt& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) break;
    const BigInt factor = top / lead;
    quot[static_cast<std::size_t>(k - dq)] = factor;
    for (int i = 0; i <= dq; ++i) {
      rem[static_cast<std::size_t>(k - dq + i)] -= factor * divisor.coeffs()[static_cast<std::size_t>(i)];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial exact_divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  auto [q, r] = divide(dividend, divisor);
  if (!r.is_zero()) throw InexactDivision(std::move(r));
  return q;
}

IntPolynomial pow(const IntPolynomial& p, unsigned exponent) {
  IntPolynomial result{1};
  IntPolynomial base = p;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

IntPolynomial reciprocal(const IntPolynomial& p, int n) {
  if (n < p.degree()) {
    throw InvalidInput("reciprocal: n = " + std::to_string(n) + " is below degree " +
                       std::to_string(p.degree()));
  }
  if (p.is_zero()) return {};
  std::vector<BigInt> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(n - i)] = p.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial translate(const IntPolynomial& p, const BigInt& c) {
  // Horner in the shifted variable: p(t + c) = (...(a_d (t + c) + a_{d-1})(t + c) ...).
  const IntPolynomial step(std::vector<BigInt>{c, 1});
  IntPolynomial acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * step + IntPolynomial(std::vector<BigInt>{*it});
  }
  return acc;
}

std::string to_string(const IntPolynomial& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::string_view to_string(LogConcavityMode mode) {
  return mode == LogConcavityMode::kSigned ? "signed" : "absolute";
}

namespace {

bool concave_at(std::span<const BigInt> seq, std::size_t i, LogConcavityMode mode) {
  if (mode == LogConcavityMode::kAbsolute) {
    return abs(seq[i - 1]) * abs(seq[i + 1]) <= seq[i] * seq[i];
  }
  return seq[i - 1] * seq[i + 1] <= seq[i] * seq[i];
}

}  // namespace

CheckReport is_log_concave(std::span<const BigInt> seq, std::size_t lo, std::size_t hi,
                           LogConcavityMode mode) {
  if (!seq.empty() && (lo > hi || hi >= seq.size())) {
    throw InvalidInput("log-concavity window outside the sequence");
  }
  CheckReport report = CheckReport::pass("log_concave");
  report.details["mode"] = std::string(to_string(mode));
  report.details["window"] = {lo, hi};
  for (std::size_t i = lo + 1; i < hi; ++i) {
    if (!concave_at(seq, i, mode)) {
      report.verdict = Verdict::kFail;
      std::ostringstream w;
      w << "i=" << i << ": e[" << i - 1 << "]*e[" << i + 1 << "] = "
        << BigInt(seq[i - 1] * seq[i + 1]).get_str() << " > e[" << i
        << "]^2 = " << BigInt(seq[i] * seq[i]).get_str();
      report.witness = w.str();
      report.details["first_violation"] = i;
      break;
    }
  }
  return report;
}

IndexWindow largest_log_concave_window(std::span<const BigInt> seq, LogConcavityMode mode) {
  if (seq.empty()) return {};
  IndexWindow best{0, 0};
  std::size_t start = 0;
  for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
    if (!concave_at(seq, i, mode)) {
      if (i - start > best.hi - best.lo) best = {start, i};
      start = i;
    }
  }
  if (seq.size() - 1 - start > best.hi - best.lo) best = {start, seq.size() - 1};
  return best;
}

CheckReport is_signed_palindrome(const IntPolynomial& p, int sign) {
  if (p.is_zero()) throw InvalidInput("signed palindrome check needs a nonzero polynomial");
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be +1 or -1");
  CheckReport report = CheckReport::pass("signed_palindrome");
  const int lo = p.low_degree();
  const int hi = p.degree();
  report.details["sign"] = sign;
  report.details["window"] = {lo, hi};
  for (int i = 0; lo + i <= hi - i; ++i) {
    const BigInt a = p.coeff(lo + i);
    const BigInt b = p.coeff(hi - i);
    if (a != sign * b) {
      report.verdict = Verdict::kFail;
      report.witness = "b[" + std::to_string(lo + i) + "] = " + a.get_str() + " but " +
                       (sign > 0 ? "" : "-") + "b[" + std::to_string(hi - i) + "] = " +
                       BigInt(sign * b).get_str();
      break;
    }
  }
  return report;
}

CheckReport brenti_criterion(const IntPolynomial& p) {
  CheckReport report = CheckReport::pass("brenti_criterion");
  report.details["coeffs"] = nlohmann::json::array();
  for (const auto& c : p.coeffs()) report.details["coeffs"].push_back(c.get_str());
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) < 0) {
      report.verdict = Verdict::kFail;
      report.witness = "a_" + std::to_string(i) + " = " + p.coeff(i).get_str() + " is negative";
      return report;
    }
  }
  for (const int i : {1, 2}) {
    if (p.coeff(i) < 3) {
      report.verdict = Verdict::kFail;
      report.witness = "a_" + std::to_string(i) + " = " + p.coeff(i).get_str() + " < 3";
      return report;
    }
  }
  return report;
}

}  // namespace facering
