#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treealg/exact/bigint.hpp"
#include "treealg/selfsim/recursion.hpp"

namespace treealg::selfsim {

struct ContractionParams {
  exact::Rational lambda;  // in (0, 1)
  std::size_t     depth = 1;
  std::uint64_t   K     = 0;
};

struct ContractionWitness {
  GroupWord     word;
  Vertex        vertex;
  GroupWord     section;
  std::size_t   word_length    = 0;
  std::size_t   section_length = 0;
};

struct ContractionReport {
  bool                              pass = true;
  std::uint64_t                     words_checked = 0;
  // Largest |w@v| - lambda |w| seen; the first violator if the check failed.
  std::optional<ContractionWitness> worst;
  // Length-two products found equal to a shorter element; words containing
  // them are skipped because they are not geodesic.
  std::vector<std::string>          shortening_pairs;
};

// Exact triviality of a word: true iff every section reachable from w has a
// trivial root permutation. Throws resource-limit past `max_states`.
bool is_trivial(WreathRecursion const& rec, GroupWord const& w, std::size_t max_states = 200000);

// Checks |w@v| <= lambda |w| + K for all words w of length <= max_len with no
// length-two subword equal to a shorter element, and all v of level depth.
// Section lengths are measured after the same length-two rewriting.
ContractionReport contraction_certificate(WreathRecursion const& rec,
                                          ContractionParams const& params,
                                          std::size_t              max_len);

// f(0..radius): number of distinct images of `basepoint` under products of at
// most n generators (positive generators only, breadth first).
std::vector<std::uint64_t> orbit_growth(WreathRecursion const& rec,
                                        Vertex const&          basepoint,
                                        std::size_t            radius);

}  // namespace treealg::selfsim
