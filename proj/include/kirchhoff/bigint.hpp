#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kirchhoff {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string toDecimal(const BigInt& v) { return v.get_str(10); }

/// Natural logarithm of a positive big integer, accurate to double precision
/// regardless of magnitude.
double logBig(const BigInt& v);

BigInt binomial(std::uint64_t n, std::uint64_t k);

}  // namespace kirchhoff
