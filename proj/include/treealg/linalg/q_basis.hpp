#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "treealg/exact/bigint.hpp"
#include "treealg/linalg/bits.hpp"

namespace treealg::linalg {

using IntVec = std::vector<exact::BigInt>;

// Reduced echelon basis of a subspace of Q^length spanned by integer
// vectors. Rows are kept primitive with a positive pivot, which makes them
// canonical. Arithmetic runs on 64-bit integers and transparently restarts
// on arbitrary-precision integers if an entry would grow past 2^30.
class QBasis {
 public:
  explicit QBasis(std::size_t length);
  ~QBasis();
  QBasis(QBasis&&) noexcept;
  QBasis& operator=(QBasis&&) noexcept;

  std::size_t length() const noexcept { return _length; }
  std::size_t dim() const noexcept;
  IntVec      row(std::size_t i) const;
  bool        uses_bigint() const noexcept;

  bool                contains(IntVec const& v) const;
  std::vector<IntVec> insert(std::vector<IntVec> batch, Exec exec = Exec::serial);

 private:
  struct Impl;
  std::size_t           _length;
  std::unique_ptr<Impl> _impl;
};

}  // namespace treealg::linalg
