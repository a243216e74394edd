#pragma once

#include <gmpxx.h>

#include <string>

namespace facering {

/// Arbitrary-precision signed integer used for every exact quantity.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// C(n, k); zero when k < 0 or k > n. Negative n is not supported.
BigInt binomial(long n, long k);

}  // namespace facering
