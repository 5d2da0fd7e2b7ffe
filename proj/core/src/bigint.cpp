#include "orbitcensus/bigint.hpp"

#include <cmath>

#include "orbitcensus/error.hpp"

namespace orbitcensus {

auto pow2(unsigned long e) -> BigInt {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return r;
}

auto pow(const BigInt& x, unsigned long k) -> BigInt {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

auto log2(const BigInt& x) -> double {
  if (sgn(x) <= 0) throw ParameterError("log2 of a non-positive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return static_cast<double>(exp) + std::log2(mant);
}

auto log2(const Rational& x) -> double {
  if (sgn(x) <= 0) throw ParameterError("log2 of a non-positive rational");
  return log2(BigInt(x.get_num())) - log2(BigInt(x.get_den()));
}

auto to_decimal(const BigInt& x) -> std::string { return x.get_str(10); }

auto parse_decimal(const std::string& text) -> BigInt {
  BigInt r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw ParameterError("malformed decimal integer '" + text + "'");
  }
  return r;
}

auto is_prime(std::uint64_t n) -> bool {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace orbitcensus
