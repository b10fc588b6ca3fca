#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treealg/exact/bigint.hpp"
#include "treealg/permgrp/permutation.hpp"

namespace treealg::permgrp {

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm. Base points are chosen greedily as the smallest point moved by
// a generator, so two runs on the same input agree exactly.
class PermGroup {
 public:
  PermGroup(std::vector<Permutation> const& generators, std::size_t degree);

  std::size_t                     degree() const noexcept { return _degree; }
  exact::BigInt                   order() const;
  bool                            contains(Permutation const& g) const;
  std::vector<std::uint32_t>      base() const;
  std::vector<Permutation> const& strong_generators() const noexcept { return _strong; }
  std::vector<std::size_t>        orbit_sizes() const;

 private:
  struct Level {
    std::uint32_t              point;
    std::vector<std::size_t>   gens;     // indices into _strong
    std::vector<std::int32_t>  slot;     // orbit position of each point, -1 outside
    std::vector<std::uint32_t> orbit;
    std::vector<Permutation>   reps;     // reps[k] maps point to orbit[k]
    std::vector<Permutation>   reps_inv;
    // checked[k] = number of gens already tested against orbit[k]
    std::vector<std::size_t>   checked;
  };

  void extend_base(Permutation const& g);
  void extend_orbit(std::size_t level);
  // Returns the residue and the first level at which sifting stopped.
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void add_strong(Permutation g, std::size_t from, std::size_t upto);

  std::size_t              _degree;
  std::vector<Permutation> _strong;
  std::vector<Level>       _levels;
};

// Order of the group generated by `generators` by listing every element.
// Returns nothing if more than `limit` elements are found.
std::optional<std::uint64_t> exhaustive_order(std::vector<Permutation> const& generators,
                                              std::size_t degree, std::uint64_t limit);

}  // namespace treealg::permgrp
