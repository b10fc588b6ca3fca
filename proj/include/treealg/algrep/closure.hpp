#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treealg/algrep/algebra.hpp"
#include "treealg/algrep/span.hpp"

namespace treealg::algrep {

// Largest level at which whole-algebra spans are built: 7 over GF(2), 5 over
// other fields.
std::size_t default_level_cap(exact::FieldSpec field);
// Filtrations only hold a few hundred rows, so they may go deeper.
inline constexpr std::size_t default_filtration_cap = 8;

// Span of the level-n image of the group algebra: the identity closed under
// right multiplication by the generator matrices.
SpanBasis   algebra_span(Algebra const& alg, std::size_t n, Exec exec = Exec::parallel);
std::size_t algebra_dimension(Algebra const& alg, std::size_t n, Exec exec = Exec::parallel);
std::size_t algebra_dimension(Algebra const& alg, std::size_t n, std::size_t level_cap,
                              Exec exec = Exec::parallel);

// matrix:  dim / q^{2n} * (q^2 - 1) / (dim P - 1)
// closure: dim / dim P_n with dim P_n = 1 + (dim P - 1)(q^{2n} - 1)/(q^2 - 1)
// where P is the level-1 image. Entries are for n = 1..n_max.
enum class HausdorffNorm { matrix, closure };
std::vector<exact::Rational> algebra_hausdorff_sequence(Algebra const& alg, std::size_t n_max,
                                                        HausdorffNorm norm = HausdorffNorm::matrix,
                                                        Exec          exec = Exec::parallel);
// dim P_n for the normalisation above.
exact::BigInt closure_dimension(std::uint32_t q, std::size_t dim_p, std::size_t n);

// ball:  V_d = span of products of at most d generators, a_d = dim V_d/V_{d-1}.
// power: W_d = span of products of at least d generators, a_d = dim W_d/W_{d+1};
//        only offered in characteristic q, where the generators are nilpotent.
enum class FiltrationMode { ball, power };

struct FiltrationOptions {
  FiltrationMode mode        = FiltrationMode::ball;
  std::size_t    start_level = 1;
  std::size_t    level_cap   = default_filtration_cap;
  Exec           exec        = Exec::parallel;
};

struct FiltrationReport {
  std::vector<std::size_t>              a;  // values at the certifying (or last) level
  std::size_t                           level  = 0;
  bool                                  stable = false;
  std::vector<std::vector<std::size_t>> per_level;  // per_level[i] is level start+i
  std::size_t                           start_level = 0;
};

std::vector<std::size_t> filtration_at_level(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                             std::size_t d_max, std::size_t n, FiltrationMode mode,
                                             Exec exec = Exec::parallel);

// Levels are tried in turn until two consecutive ones agree on a_0..a_dmax.
// Reaching the cap without agreement returns the last level with stable=false.
FiltrationReport filtration_dims(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                 std::size_t d_max, FiltrationOptions const& options = {});

// Two-sided ideal of the level-n image generated by `gens`.
SpanBasis ideal_closure(Algebra const& alg, std::vector<AlgebraElement> const& gens, std::size_t n,
                        Exec exec = Exec::parallel);

// Closes a span under multiplication by the generator matrices on the given
// sides, starting from `seeds`.
enum class Side { left, right, both };
void close_under_generators(Algebra const& alg, SpanBasis& span, std::vector<LevelMatrix> const& seeds,
                            Side side);

struct IdealQuotientLevel {
  std::size_t level;
  std::size_t algebra_dim;
  std::size_t ideal_dim;
  std::size_t square_dim;
  std::size_t block_dim;  // dim M_X(K) = q^2 dim K at level - 1
  bool        block_inside;  // M_X(K) <= K at this level
};

struct IdealQuotientReport {
  std::size_t                     codim       = 0;
  std::size_t                     k_over_k2   = 0;
  std::size_t                     k_over_mxk  = 0;
  bool                            block_inside = false;
  std::size_t                     level        = 0;
  bool                            stable       = false;
  std::vector<IdealQuotientLevel> per_level;
};

IdealQuotientLevel ideal_quotient_at_level(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                           std::size_t n, Exec exec = Exec::parallel);

IdealQuotientReport ideal_quotient_dims(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                        std::size_t start_level = 2, std::size_t level_cap = 0,
                                        Exec exec = Exec::parallel);

// Subspaces of the level-n image named by the filtration comparisons:
// varpi^d (products of at least d letters), K^d, and M_{X^k}(K).
struct SubspaceSpec {
  enum class Kind { varpi, ideal_power, block } kind = Kind::varpi;
  std::size_t exponent = 1;  // d for varpi^d and K^d, k for M_{X^k}(K)

  // "varpi^3", "w^3", "K^2", "K", "MXK", "M_X(K)", "M_{X^2}(K)"
  static SubspaceSpec parse(std::string const& text);
  std::string         to_string() const;
};

enum class Relation { subset, equal, neither };
std::string to_string(Relation r);

// Letters generate varpi, `ideal` generates K.
struct BranchSetup {
  Algebra const&              alg;
  std::vector<AlgebraElement> letters;
  std::vector<AlgebraElement> ideal;
};

SpanBasis                subspace_basis(BranchSetup const& setup, SubspaceSpec const& spec, std::size_t n,
                                        Exec exec = Exec::parallel);
std::vector<LevelMatrix> subspace_generators(BranchSetup const& setup, SubspaceSpec const& spec,
                                             std::size_t n, Exec exec = Exec::parallel);
Relation subspace_relation(BranchSetup const& setup, SubspaceSpec const& lhs, SubspaceSpec const& rhs,
                           std::size_t n, Exec exec = Exec::parallel);

// Level n+1 to level n: entry (v, w) of the image is the sum over y of the
// entries (v0, wy), where v0 and wy append a last letter to v and w.
LevelMatrix truncate(LevelMatrix const& m);

}  // namespace treealg::algrep
