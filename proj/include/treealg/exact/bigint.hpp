#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace treealg::exact {

// Arbitrary-precision integers and rationals are GMP-backed.
using BigInt   = mpz_class;
using Rational = mpq_class;

bool is_prime(std::uint64_t n) noexcept;

BigInt pow(BigInt const& base, std::uint64_t exponent);
BigInt pow(std::uint64_t base, std::uint64_t exponent);

// Returns k with value == base^k, or nothing if value is not an exact power.
std::optional<std::uint64_t> exact_log(BigInt const& value, std::uint64_t base);

std::string to_string(BigInt const& value);
std::string to_string(Rational const& value);  // "a/b", or "a" when b == 1

// Canonicalised rational num/den; den must be nonzero.
Rational make_rational(BigInt const& num, BigInt const& den);

}  // namespace treealg::exact
