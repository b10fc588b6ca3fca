#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "treealg/exact/bigint.hpp"
#include "treealg/permgrp/permutation.hpp"
#include "treealg/permgrp/schreier_sims.hpp"
#include "treealg/selfsim/recursion.hpp"

namespace treealg::permgrp {

// Default largest permutation degree q^n accepted by the order routines.
inline constexpr std::uint64_t default_degree_cap = 6561;

// Generator images on X^n for every level up to a bound, built bottom-up:
// pi_n(g)[x w] = pi_g(x) pi_{n-1}(g@x)[w] with vertices indexed
// lexicographically, first letter most significant.
class LevelTower {
 public:
  explicit LevelTower(selfsim::WreathRecursion const& rec);

  selfsim::WreathRecursion const& recursion() const noexcept { return _rec; }

  std::vector<Permutation> const& generators(std::size_t n);
  std::vector<Permutation> const& inverse_generators(std::size_t n);

  Permutation word(selfsim::GroupWord const& w, std::size_t n);

 private:
  selfsim::WreathRecursion const&       _rec;
  std::vector<std::vector<Permutation>> _gens;
  std::vector<std::vector<Permutation>> _inv;
};

std::uint64_t degree_at_level(std::uint32_t q, std::size_t n);  // throws resource-limit on overflow

Permutation level_permutation(selfsim::WreathRecursion const& rec,
                              selfsim::GroupWord const&       w,
                              std::size_t                     n);

exact::BigInt group_order_at_level(selfsim::WreathRecursion const& rec,
                                   std::size_t                     n,
                                   std::uint64_t degree_cap = default_degree_cap);

exact::BigInt element_order_at_level(selfsim::WreathRecursion const& rec,
                                     selfsim::GroupWord const&       w,
                                     std::size_t                     n);

bool is_level_transitive(selfsim::WreathRecursion const& rec, std::size_t n);

// Relative dimension log_p #pi^n(G) * (p-1)/(p^n-1) for n = 1..n_max.
std::vector<exact::Rational> group_hausdorff_sequence(selfsim::WreathRecursion const& rec,
                                                      std::uint32_t                   p,
                                                      std::size_t                     n_max,
                                                      std::uint64_t degree_cap = default_degree_cap);

}  // namespace treealg::permgrp
