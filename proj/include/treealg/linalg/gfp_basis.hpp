#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "treealg/linalg/bits.hpp"

namespace treealg::linalg {

using Bytes = std::vector<std::uint8_t>;

// Canonical reduced echelon basis over GF(p) for primes p < 256, one byte
// per coordinate. Pivots are the first nonzero coordinate, scaled to 1.
class GfpBasis {
 public:
  GfpBasis(std::uint32_t p, std::size_t length);
  ~GfpBasis();
  GfpBasis(GfpBasis&&) noexcept;
  GfpBasis& operator=(GfpBasis&&) noexcept;

  std::uint32_t                   prime() const noexcept { return _p; }
  std::size_t                     length() const noexcept;
  std::size_t                     dim() const noexcept;
  Bytes const&                    row(std::size_t i) const;
  std::vector<std::size_t> const& pivots() const noexcept;

  void               reduce(Bytes& v) const;
  bool               contains(Bytes const& v) const;
  std::vector<Bytes> insert(std::vector<Bytes> batch, Exec exec = Exec::serial);

 private:
  struct Impl;
  std::uint32_t         _p;
  std::unique_ptr<Impl> _impl;
};

// Row-major N x N products over GF(p).
Bytes gfp_matmul(Bytes const& a, Bytes const& b, std::size_t n, std::uint32_t p,
                 Exec exec = Exec::serial);

}  // namespace treealg::linalg
