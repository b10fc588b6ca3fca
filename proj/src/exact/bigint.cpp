#include "treealg/exact/bigint.hpp"

#include "treealg/error.hpp"

namespace treealg {

char const* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument:
      return "invalid-argument";
    case ErrorKind::not_found:
      return "not-found";
    case ErrorKind::resource_limit:
      return "resource-limit";
    case ErrorKind::precondition_violation:
      return "precondition-violation";
  }
  return "error";
}

}  // namespace treealg

namespace treealg::exact {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) {
    return false;
  }
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      return false;
    }
  }
  return true;
}

BigInt pow(BigInt const& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b      = base;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= b;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      b *= b;
    }
  }
  return result;
}

BigInt pow(std::uint64_t base, std::uint64_t exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

std::optional<std::uint64_t> exact_log(BigInt const& value, std::uint64_t base) {
  if (value <= 0 || base < 2) {
    return std::nullopt;
  }
  BigInt        v = value;
  std::uint64_t k = 0;
  while (v > 1) {
    if (mpz_divisible_ui_p(v.get_mpz_t(), base) == 0) {
      return std::nullopt;
    }
    mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), base);
    ++k;
  }
  return k;
}

std::string to_string(BigInt const& value) { return value.get_str(); }

std::string to_string(Rational const& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational make_rational(BigInt const& num, BigInt const& den) {
  if (den == 0) {
    throw_invalid("rational with zero denominator");
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace treealg::exact
