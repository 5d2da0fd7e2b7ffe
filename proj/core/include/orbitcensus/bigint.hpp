#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace orbitcensus {

using BigInt = mpz_class;
using Rational = mpq_class;

/// 2^e as a big integer.
[[nodiscard]] auto pow2(unsigned long e) -> BigInt;

/// x^k for non-negative k.
[[nodiscard]] auto pow(const BigInt& x, unsigned long k) -> BigInt;

/// log2(x) for x > 0, accurate to double precision for arbitrarily large x.
[[nodiscard]] auto log2(const BigInt& x) -> double;

/// log2(x) for a positive rational.
[[nodiscard]] auto log2(const Rational& x) -> double;

[[nodiscard]] auto to_decimal(const BigInt& x) -> std::string;

/// Parses a decimal integer; throws ParameterError on malformed input.
[[nodiscard]] auto parse_decimal(const std::string& text) -> BigInt;

[[nodiscard]] auto is_prime(std::uint64_t n) -> bool;

}  // namespace orbitcensus
