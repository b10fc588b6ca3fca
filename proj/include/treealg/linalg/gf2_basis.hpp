#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "treealg/linalg/bits.hpp"

namespace treealg::linalg {

// Reduced row echelon basis of a subspace of GF(2)^bits. The pivot of a row
// is its lowest set bit and every row vanishes at every other pivot, so the
// stored rows depend only on the subspace.
class Gf2Basis {
 public:
  explicit Gf2Basis(std::size_t bits);

  std::size_t bits() const noexcept { return _bits; }
  std::size_t words() const noexcept { return _words; }
  std::size_t dim() const noexcept { return _pivots.size(); }

  Word const*                       row(std::size_t i) const { return _rows.data() + i * _words; }
  std::vector<std::uint32_t> const& pivots() const noexcept { return _pivots; }

  // Replaces v by its canonical residue: v plus the unique span element that
  // clears every pivot position.
  void reduce(Word* v) const;
  bool contains(Word const* v) const;

  // Adds the vectors in order. Returns, in input order, the residues that
  // enlarged the span (each one reduced against the basis as it stood when
  // that vector was reached).
  std::vector<Bits> insert(std::vector<Bits> batch, Exec exec = Exec::serial);
  bool              insert_one(Bits v);

 private:
  void absorb(std::vector<Bits> const& fresh, Exec exec);

  std::size_t                _bits;
  std::size_t                _words;
  std::vector<Word>          _rows;
  std::vector<std::uint32_t> _pivots;
};

// Dense products of N x N matrices stored row-major as N*N bits (row i
// occupies bits [iN, iN+N)). The parallel path is the method of four
// Russians with rows split across OpenMP threads.
Bits gf2_matmul(Bits const& a, Bits const& b, std::size_t n, Exec exec = Exec::serial);

}  // namespace treealg::linalg
