#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace treealg::linalg {

// Which implementation of a kernel to run. Both variants return identical
// results; `serial` is the reference used by the tests.
enum class Exec { serial, parallel };

using Word = std::uint64_t;
using Bits = std::vector<Word>;

constexpr std::size_t words_for(std::size_t bits) noexcept { return (bits + 63) / 64; }

inline bool get_bit(Word const* v, std::size_t i) noexcept { return (v[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(Word* v, std::size_t i) noexcept { v[i >> 6] |= Word{1} << (i & 63); }
inline void flip_bit(Word* v, std::size_t i) noexcept { v[i >> 6] ^= Word{1} << (i & 63); }

inline void xor_into(Word* dst, Word const* src, std::size_t words) noexcept {
  for (std::size_t k = 0; k < words; ++k) {
    dst[k] ^= src[k];
  }
}

inline bool all_zero(Word const* v, std::size_t words) noexcept {
  for (std::size_t k = 0; k < words; ++k) {
    if (v[k] != 0) {
      return false;
    }
  }
  return true;
}

// Index of the lowest set bit, or `npos` when the vector is zero.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t lowest_bit(Word const* v, std::size_t words) noexcept {
  for (std::size_t k = 0; k < words; ++k) {
    if (v[k] != 0) {
      return k * 64 + static_cast<std::size_t>(std::countr_zero(v[k]));
    }
  }
  return npos;
}

inline std::size_t popcount(Word const* v, std::size_t words) noexcept {
  std::size_t n = 0;
  for (std::size_t k = 0; k < words; ++k) {
    n += static_cast<std::size_t>(std::popcount(v[k]));
  }
  return n;
}

}  // namespace treealg::linalg
