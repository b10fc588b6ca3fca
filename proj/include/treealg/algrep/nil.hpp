#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treealg/algrep/algebra.hpp"

namespace treealg::algrep {

// Highest level used by nil and identity checks: 8 over finite fields, 5 over Q.
std::size_t nil_level_cap(exact::FieldSpec field);

struct NilReport {
  std::optional<std::uint64_t> degree;  // empty when x^max_pow survives at some level
  std::vector<std::optional<std::uint64_t>> per_level;  // per_level[i] is level i+1
  std::size_t stable_level = 0;  // first level whose degree equals the final one
};

// Smallest k <= max_pow with x^k = 0 at every level 1..level_cap.
NilReport nil_degree(Algebra const& alg, AlgebraElement const& x, std::uint64_t max_pow,
                     std::size_t level_cap = 0, Exec exec = Exec::parallel);
// Degree of nilpotency of a single matrix, if at most max_pow.
std::optional<std::uint64_t> matrix_nil_degree(LevelMatrix const& m, std::uint64_t max_pow,
                                               Exec exec = Exec::parallel);

struct IdentityReport {
  bool                       holds = true;
  std::optional<std::size_t> first_failure;
};

// lhs = rhs at every level 0..n_max.
IdentityReport product_identity_check(Algebra const& alg, AlgebraElement const& lhs,
                                      AlgebraElement const& rhs, std::size_t n_max,
                                      Exec exec = Exec::parallel);

// Smallest level n <= n_cap at which x^0..x^k_max are pairwise distinct.
std::optional<std::size_t> distinct_powers(Algebra const& alg, AlgebraElement const& x,
                                           std::uint64_t k_max, std::size_t n_cap,
                                           Exec exec = Exec::parallel);

// Homogeneous elements of the graded Grigorchuk algebra over GF(2), in the
// letters A, B, D (C = B + D).
struct GradedNilReport {
  std::size_t                 degree = 0;
  std::size_t                 trials = 0;
  std::size_t                 passed = 0;  // x^(72 d) = 0 at every level up to the cap
  std::uint64_t               max_observed = 0;
  std::vector<std::string>    failures;
  std::vector<std::uint64_t>  observed;  // per trial, 0 when not nil within the bound
};

// Exhaustive for degree 1 when trials is 0: all 7 nonzero combinations.
// Otherwise `trials` random nonzero combinations of the 3^d words, seeded.
GradedNilReport graded_nil_sample(Algebra const& alg, std::size_t degree, std::size_t trials,
                                  std::uint64_t seed, std::size_t level_cap = 0,
                                  Exec exec = Exec::parallel);

struct MonomialSurvey {
  std::size_t   words      = 0;  // nonempty words without repeated adjacent letters
  std::size_t   nil        = 0;  // words with w^power = 0
  std::size_t   zero_words = 0;  // words already zero at the level
  std::uint64_t max_degree = 0;  // largest observed nil degree (power of two steps)
  std::vector<std::string> failures;
};

// Every word over {A,B,C,D} of length 1..max_len with no letter repeated
// consecutively (squares of letters vanish), checked for w^(2^k) = 0 with
// 2^k = `power` at the given level. The parallel version splits the search
// over the first two letters.
MonomialSurvey monomial_nil_survey(Algebra const& alg, std::size_t max_len, std::uint64_t power,
                                   std::size_t level, Exec exec = Exec::parallel);

// Block identities of the branching ideal at level n >= 2, for the
// Grigorchuk group over GF(2). `printed` is equality with the single-block
// form (the right-hand side in block (1,1), zeros elsewhere); `corner`
// only compares block (1,1).
struct BlockIdentity {
  std::string lhs;
  std::string rhs;
  bool        printed = false;
  bool        corner  = false;
};
std::vector<BlockIdentity> branch_block_identity(Algebra const& alg, std::size_t n);

}  // namespace treealg::algrep
