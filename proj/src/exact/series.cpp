#include "treealg/exact/series.hpp"

#include <cmath>
#include <cstdio>

#include "treealg/error.hpp"

namespace treealg::exact {

TruncSeries::TruncSeries(std::size_t trunc) : _coeffs(trunc + 1, BigInt(0)) {}

TruncSeries::TruncSeries(std::vector<BigInt> coefficients)
    : _coeffs(std::move(coefficients)) {
  if (_coeffs.empty()) {
    throw_invalid("series needs at least one coefficient");
  }
}

TruncSeries TruncSeries::one(std::size_t trunc) {
  TruncSeries s(trunc);
  s[0] = 1;
  return s;
}

TruncSeries operator*(TruncSeries const& a, TruncSeries const& b) {
  if (a.trunc() != b.trunc()) {
    throw_invalid("series truncations differ");
  }
  std::size_t const n = a.trunc();
  TruncSeries       out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; i + j <= n; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

TruncSeries operator+(TruncSeries const& a, TruncSeries const& b) {
  if (a.trunc() != b.trunc()) {
    throw_invalid("series truncations differ");
  }
  TruncSeries out(a.trunc());
  for (std::size_t i = 0; i <= a.trunc(); ++i) {
    out[i] = a[i] + b[i];
  }
  return out;
}

TruncSeries TruncSeries::pow(std::uint64_t exponent) const {
  TruncSeries result = one(trunc());
  TruncSeries base   = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = result * base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base = base * base;
    }
  }
  return result;
}

TruncSeries jennings_series(std::vector<std::uint64_t> const& ell,
                            std::uint32_t                     p,
                            std::size_t                       trunc) {
  if (!is_prime(p)) {
    throw_invalid("jennings_series: " + std::to_string(p) + " is not prime");
  }
  TruncSeries result = TruncSeries::one(trunc);
  for (std::size_t idx = 0; idx < ell.size(); ++idx) {
    std::size_t const n = idx + 1;
    if (ell[idx] == 0 || n > trunc) {
      continue;
    }
    // (1 - t^{pn}) / (1 - t^n) = 1 + t^n + ... + t^{(p-1)n}
    TruncSeries factor(trunc);
    for (std::size_t k = 0; k < p && k * n <= trunc; ++k) {
      factor[k * n] = 1;
    }
    result = result * factor.pow(ell[idx]);
  }
  return result;
}

GkEstimate series_dims_to_gk(std::vector<BigInt> const& coefficients) {
  if (coefficients.size() < 3) {
    throw_invalid("series_dims_to_gk needs at least 3 coefficients");
  }
  BigInt total = 0;
  for (auto const& a : coefficients) {
    if (a < 0) {
      throw_invalid("series_dims_to_gk: negative coefficient");
    }
    total += a;
  }
  if (total == 0) {
    throw_invalid("series_dims_to_gk: all coefficients vanish");
  }
  double const n = static_cast<double>(coefficients.size() - 1);
  // log of a big integer through mpz_get_d_2exp to avoid overflow.
  long         exp2     = 0;
  double const mantissa = mpz_get_d_2exp(&exp2, total.get_mpz_t());
  double const log_total = std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
  GkEstimate   est{log_total / std::log(n), {}};
  char         buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", est.value);
  est.decimal = buf;
  return est;
}

}  // namespace treealg::exact
