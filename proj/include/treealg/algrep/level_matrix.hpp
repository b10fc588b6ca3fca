#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "treealg/exact/field.hpp"
#include "treealg/linalg/bits.hpp"
#include "treealg/linalg/gfp_basis.hpp"
#include "treealg/permgrp/permutation.hpp"

namespace treealg::algrep {

using linalg::Bits;
using linalg::Bytes;
using linalg::Exec;

// Dense q^n x q^n matrix over a FieldSpec, stored row-major: bit-packed over
// GF(2), one byte per entry over GF(p) with p < 256, exact rationals over Q.
// Row and column indices are vertices of X^n in lexicographic order, and the
// permutation matrix of g has its ones at (v, v^g).
class LevelMatrix {
 public:
  // Largest matrix storage accepted, in bytes.
  static constexpr std::size_t max_bytes = std::size_t{1} << 30;

  LevelMatrix(exact::FieldSpec field, std::uint32_t q, std::size_t level);  // zero matrix
  static LevelMatrix identity(exact::FieldSpec field, std::uint32_t q, std::size_t level);
  static LevelMatrix permutation(exact::FieldSpec field, std::uint32_t q, std::size_t level,
                                 permgrp::Permutation const& p);
  static LevelMatrix from_bits(std::uint32_t q, std::size_t level, Bits bits);
  static LevelMatrix from_bytes(exact::FieldSpec field, std::uint32_t q, std::size_t level,
                                Bytes bytes);
  static LevelMatrix from_rationals(std::uint32_t q, std::size_t level,
                                    std::vector<exact::Rational> entries);

  exact::FieldSpec field() const noexcept { return _field; }
  std::uint32_t    q() const noexcept { return _q; }
  std::size_t      level() const noexcept { return _level; }
  std::size_t      size() const noexcept { return _n; }

  exact::Scalar at(std::size_t i, std::size_t j) const;
  void          set(std::size_t i, std::size_t j, exact::Scalar const& value);
  bool          is_zero() const;

  // this += c * P_p
  void add_permutation(exact::Scalar const& c, permgrp::Permutation const& p);

  // P_g * this: row i of the result is row i^g of this.
  LevelMatrix left_permuted(permgrp::Permutation const& g) const;
  // this * P_g: entry (i, k^g) of the result is entry (i, k) of this.
  LevelMatrix right_permuted(permgrp::Permutation const& g) const;

  LevelMatrix& operator+=(LevelMatrix const& other);
  LevelMatrix& operator-=(LevelMatrix const& other);
  LevelMatrix  scaled(exact::Scalar const& c) const;

  friend LevelMatrix operator+(LevelMatrix a, LevelMatrix const& b) { return a += b; }
  friend LevelMatrix operator-(LevelMatrix a, LevelMatrix const& b) { return a -= b; }
  friend bool        operator==(LevelMatrix const& a, LevelMatrix const& b);

  LevelMatrix multiply(LevelMatrix const& other, Exec exec = Exec::parallel) const;
  LevelMatrix power(std::uint64_t k, Exec exec = Exec::parallel) const;

  // Block (u, v): rows whose first letter is u, columns whose first letter
  // is v, as a level n-1 matrix.
  LevelMatrix block(std::uint32_t u, std::uint32_t v) const;
  // E_uv (x) kappa: the level n+1 matrix with kappa in block (u, v).
  static LevelMatrix unit_block(std::uint32_t u, std::uint32_t v, LevelMatrix const& kappa);

  Bits const&                         bits() const { return std::get<Bits>(_data); }
  Bytes const&                        bytes() const { return std::get<Bytes>(_data); }
  std::vector<exact::Rational> const& rationals() const {
    return std::get<std::vector<exact::Rational>>(_data);
  }

  // One line per row, entries separated by spaces.
  std::string to_string() const;

 private:
  void check_compatible(LevelMatrix const& other) const;

  exact::FieldSpec                                          _field;
  std::uint32_t                                             _q     = 2;
  std::size_t                                               _level = 0;
  std::size_t                                               _n     = 1;
  std::variant<Bits, Bytes, std::vector<exact::Rational>>   _data;
};

}  // namespace treealg::algrep
