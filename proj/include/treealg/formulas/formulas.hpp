#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treealg/exact/bigint.hpp"

// Closed forms used as independent oracles. Nothing here touches groups or
// matrices; every function rejects arguments outside the range where its
// formula is known to apply.
namespace treealg::formulas {

enum class CharClass { two, other };

// |pi^n(G)| for the zoo groups. Valid levels: grigorchuk n >= 3,
// gupta_sidki and fabrykowski_gupta_bg n >= 2, bsv and basilica even n >= 2,
// odometer n >= 0.
exact::BigInt expected_group_order(std::string const& name, std::uint64_t n);

// The exponent e with |pi^n(G)| = q^e, and the relative value e / (number
// of vertices above level n), whose limit is the Hausdorff dimension.
exact::BigInt   expected_order_exponent(std::string const& name, std::uint64_t n);
exact::Rational expected_group_hausdorff_term(std::string const& name, std::uint64_t n);

// dim pi^n(A) for the Grigorchuk algebra: (4^n + 2)/3 for n >= 1 in odd
// characteristic and 0, (14 * 4^(n-2) + 10)/3 for n >= 2 in characteristic 2.
exact::BigInt expected_algebra_dim(CharClass c, std::uint64_t n);
// dim pi^n(A) / dim P_n with dim P_n = (4^n + 2)/3.
exact::Rational expected_algebra_hausdorff_term(CharClass c, std::uint64_t n);

// dim varpi^n / varpi^(n+1) in characteristic 2.
exact::BigInt expected_a_char2(std::uint64_t n);
// dim F_n / F_(n-1) for the S-ball filtration in odd characteristic, n >= 1.
exact::BigInt expected_a_charne2(std::uint64_t n);
// dim F_n for n a power of two above 4.
exact::BigInt expected_F_dim_charne2(std::uint64_t n);

// Branching ideal of the Grigorchuk algebra: K = <ADA, AB, BA> in
// characteristic 2 and K = <ab - ba> otherwise. dim K/K^2 is only known in
// characteristic 2.
struct BranchingQuotients {
  std::uint64_t                codim;
  std::optional<std::uint64_t> k_over_k2;
  std::uint64_t                k_over_m2k;
};
BranchingQuotients expected_branching_quotients(CharClass c);

// Limits: grigorchuk_group 5/8, gupta_sidki_group 4/9, fabrykowski_gupta_group
// 1/2, bsv_group 1/3, basilica_group 2/3, grigorchuk_alg_char2 7/8,
// grigorchuk_alg_charne2 1. Zoo names are accepted for the groups.
exact::Rational          expected_hausdorff(std::string const& name);
std::vector<std::string> hausdorff_names();

}  // namespace treealg::formulas
