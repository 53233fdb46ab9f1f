#include "kirchhoff/bigint.hpp"

#include <cmath>

#include "kirchhoff/error.hpp"

namespace kirchhoff {

double logBig(const BigInt& v) {
  require(sgn(v) > 0, "logarithm of a nonpositive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace kirchhoff
