#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "treealg/exact/bigint.hpp"

namespace treealg::exact {

// Integer power series truncated after degree `trunc`.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t trunc);
  TruncSeries(std::vector<BigInt> coefficients);  // trunc = size - 1

  static TruncSeries one(std::size_t trunc);

  std::size_t trunc() const noexcept { return _coeffs.size() - 1; }
  BigInt const& operator[](std::size_t k) const { return _coeffs[k]; }
  BigInt&       operator[](std::size_t k) { return _coeffs[k]; }
  std::vector<BigInt> const& coefficients() const noexcept { return _coeffs; }

  // Both operands must share the truncation degree.
  friend TruncSeries operator*(TruncSeries const& a, TruncSeries const& b);
  friend TruncSeries operator+(TruncSeries const& a, TruncSeries const& b);
  friend bool operator==(TruncSeries const& a, TruncSeries const& b) {
    return a._coeffs == b._coeffs;
  }

  TruncSeries pow(std::uint64_t exponent) const;

 private:
  std::vector<BigInt> _coeffs;
};

// Coefficients of prod_{n>=1} ((1 - t^{pn}) / (1 - t^n))^{ell_n} up to degree
// trunc, where ell_n = ell[n-1] and zero past the end of `ell`.
TruncSeries jennings_series(std::vector<std::uint64_t> const& ell,
                            std::uint32_t                     p,
                            std::size_t                       trunc);

// Diagnostic growth-exponent estimate log(sum_{k<=n} a_k) / log(n) at the
// last index n. An estimate at a finite index, not the limit itself.
struct GkEstimate {
  double      value;
  std::string decimal;  // fixed 6-digit rendering of `value`
};

GkEstimate series_dims_to_gk(std::vector<BigInt> const& coefficients);

}  // namespace treealg::exact
