#pragma once

#include <cstdint>
#include <vector>

#include "treealg/exact/bigint.hpp"

namespace treealg::permgrp {

// Permutation of {0..degree-1} acting on the right: image(v) = v^p, and
// (p * q) first applies p, then q.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);  // identity
  explicit Permutation(std::vector<std::uint32_t> images);  // validated bijection

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t   degree() const noexcept { return _img.size(); }
  std::uint32_t operator[](std::size_t v) const { return _img[v]; }
  std::vector<std::uint32_t> const& images() const noexcept { return _img; }

  bool        is_identity() const noexcept;
  Permutation inverse() const;
  exact::BigInt order() const;  // lcm of cycle lengths
  std::vector<std::vector<std::uint32_t>> cycles() const;  // nontrivial cycles

  friend Permutation operator*(Permutation const& p, Permutation const& q);
  friend bool operator==(Permutation const&, Permutation const&) = default;
  friend auto operator<=>(Permutation const&, Permutation const&) = default;

 private:
  std::vector<std::uint32_t> _img;
};

}  // namespace treealg::permgrp
