#include "treealg/linalg/gfp_basis.hpp"

#include "dense_basis.hpp"
#include "treealg/error.hpp"
#include "treealg/exact/bigint.hpp"

namespace treealg::linalg {

namespace {

struct GfpOps {
  using T = std::uint8_t;

  std::uint32_t             p;
  std::vector<std::uint8_t> mul;  // mul[a * p + b] = a*b mod p
  std::vector<std::uint8_t> inv;

  explicit GfpOps(std::uint32_t prime) : p(prime), mul(prime * prime), inv(prime, 0) {
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        mul[a * p + b] = static_cast<std::uint8_t>(a * b % p);
        if (a * b % p == 1) {
          inv[a] = static_cast<std::uint8_t>(b);
        }
      }
    }
  }

  void eliminate(std::vector<T>& v, std::vector<T> const& row, std::size_t pivot, bool) const {
    auto const* m = mul.data() + (p - v[pivot]) * p;
    for (std::size_t j = pivot; j < v.size(); ++j) {
      auto const s = static_cast<std::uint32_t>(v[j]) + m[row[j]];
      v[j]         = static_cast<T>(s >= p ? s - p : s);
    }
  }

  void normalize(std::vector<T>& v, std::size_t pivot) const {
    auto const* m = mul.data() + inv[v[pivot]] * p;
    for (std::size_t j = pivot; j < v.size(); ++j) {
      v[j] = m[v[j]];
    }
  }
};

}  // namespace

struct GfpBasis::Impl {
  detail::DenseBasis<GfpOps> basis;
};

GfpBasis::GfpBasis(std::uint32_t p, std::size_t length) : _p(p) {
  if (p < 3 || p > 255 || !exact::is_prime(p)) {
    throw_invalid("byte kernel needs an odd prime below 256");
  }
  _impl = std::make_unique<Impl>(Impl{detail::DenseBasis<GfpOps>(GfpOps(p), length)});
}

GfpBasis::~GfpBasis()                              = default;
GfpBasis::GfpBasis(GfpBasis&&) noexcept            = default;
GfpBasis& GfpBasis::operator=(GfpBasis&&) noexcept = default;

std::size_t                     GfpBasis::length() const noexcept { return _impl->basis.length(); }
std::size_t                     GfpBasis::dim() const noexcept { return _impl->basis.dim(); }
Bytes const&                    GfpBasis::row(std::size_t i) const { return _impl->basis.row(i); }
std::vector<std::size_t> const& GfpBasis::pivots() const noexcept { return _impl->basis.pivots(); }

void GfpBasis::reduce(Bytes& v) const {
  if (v.size() != length()) {
    throw_invalid("vector length does not match the basis");
  }
  _impl->basis.reduce(v);
}

bool GfpBasis::contains(Bytes const& v) const {
  Bytes tmp = v;
  reduce(tmp);
  for (auto x : tmp) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

std::vector<Bytes> GfpBasis::insert(std::vector<Bytes> batch, Exec exec) {
  for (auto const& v : batch) {
    if (v.size() != length()) {
      throw_invalid("vector length does not match the basis");
    }
  }
  return _impl->basis.insert(std::move(batch), exec);
}

Bytes gfp_matmul(Bytes const& a, Bytes const& b, std::size_t n, std::uint32_t p, Exec exec) {
  if (a.size() != n * n || b.size() != n * n) {
    throw_invalid("matrix size mismatch");
  }
  // Products are below 2^16, so a 32-bit accumulator absorbs 65536 terms.
  if (n > 65536) {
    throw_resource("matrix dimension too large for the byte kernel");
  }
  Bytes      c(n * n, 0);
  auto const row = [&](std::size_t i) {
    std::vector<std::uint32_t> acc(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
      std::uint32_t const x = a[i * n + k];
      if (x == 0) {
        continue;
      }
      auto const* brow = b.data() + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        acc[j] += x * brow[j];
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      c[i * n + j] = static_cast<std::uint8_t>(acc[j] % p);
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < n; ++i) {
      row(i);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      row(i);
    }
  }
  return c;
}

}  // namespace treealg::linalg
