#include "treealg/permgrp/permutation.hpp"

#include <numeric>

#include "treealg/error.hpp"

namespace treealg::permgrp {

Permutation::Permutation(std::size_t degree) : _img(degree) {
  std::iota(_img.begin(), _img.end(), 0U);
}

Permutation::Permutation(std::vector<std::uint32_t> images) : _img(std::move(images)) {
  std::vector<bool> seen(_img.size(), false);
  for (auto x : _img) {
    if (x >= _img.size() || seen[x]) {
      throw_invalid("permutation images do not form a bijection");
    }
    seen[x] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < _img.size(); ++i) {
    if (_img[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out._img.resize(_img.size());
  for (std::size_t i = 0; i < _img.size(); ++i) {
    out._img[_img[i]] = static_cast<std::uint32_t>(i);
  }
  return out;
}

Permutation operator*(Permutation const& p, Permutation const& q) {
  if (p.degree() != q.degree()) {
    throw_invalid("composing permutations of different degrees");
  }
  Permutation out;
  out._img.resize(p._img.size());
  for (std::size_t i = 0; i < p._img.size(); ++i) {
    out._img[i] = q._img[p._img[i]];
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool>                       seen(_img.size(), false);
  for (std::uint32_t i = 0; i < _img.size(); ++i) {
    if (seen[i] || _img[i] == i) {
      continue;
    }
    std::vector<std::uint32_t> cyc;
    for (std::uint32_t j = i; !seen[j]; j = _img[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

exact::BigInt Permutation::order() const {
  exact::BigInt result = 1;
  for (auto const& c : cycles()) {
    mpz_lcm_ui(result.get_mpz_t(), result.get_mpz_t(), c.size());
  }
  return result;
}

}  // namespace treealg::permgrp
