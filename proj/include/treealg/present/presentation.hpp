#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treealg/algrep/expr.hpp"
#include "treealg/algrep/span.hpp"
#include "treealg/selfsim/recursion.hpp"

namespace treealg::present {

// The substitution a -> aca, b -> d, c -> b, d -> c on group letters, and
// A -> ACA, B -> D, C -> B, D -> C on the char-2 letters. The char != 2
// variant is the group one extended linearly to the group ring.
enum class Sigma { group, char2, charne2 };

std::string to_string(Sigma s);
// The image of one letter; throws invalid-argument outside the domain.
std::string const& sigma_image(Sigma s, std::string const& letter);

// n-fold substitution on a word of single-letter symbols.
std::string sigma_apply(Sigma s, std::string const& word, std::size_t n);
// n-fold substitution on an expression: every symbol leaf is replaced by
// the product of its image, everything else is kept.
algrep::Expr sigma_apply(Sigma s, algrep::Expr const& e, std::size_t n);

enum class RelatorMode { group, algebra };

struct Relator {
  algrep::Expr expr;
  std::string  text;
  std::string  origin;  // "base" or "sigma^n(seed)"
};

struct RelatorSet {
  std::string          preset;
  RelatorMode          mode = RelatorMode::group;
  std::string          group;   // builtin group the relators live in
  std::uint32_t        field_char = 0;  // suggested field; 0 for group mode
  Sigma                sigma = Sigma::group;
  std::size_t          depth = 0;
  std::vector<Relator> relators;
};

std::vector<std::string> preset_names();

// Base relators together with sigma^n(seed) for 0 <= n <= depth. Group-ring
// style relators r = 1 are stored as r - 1. Unknown preset: not-found.
RelatorSet generate_relators(std::string const& preset, long depth);

struct RelatorViolation {
  std::string text;
  std::size_t level;  // first failing level
};

struct RelatorReport {
  std::size_t                   checked   = 0;
  std::size_t                   level_max = 0;
  std::vector<RelatorViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Group mode: each relator word acts trivially on levels 0..level_max.
RelatorReport check_group_relators(selfsim::WreathRecursion const& rec, std::vector<Relator> const& rels,
                                   std::size_t level_max, linalg::Exec exec = linalg::Exec::parallel);
// Algebra mode: each relator evaluates to zero on levels 0..level_max.
RelatorReport check_algebra_relators(algrep::ExprContext const& ctx, std::vector<Relator> const& rels,
                                     std::size_t level_max, linalg::Exec exec = linalg::Exec::parallel);

// Block form of sigma(w) for a word w in the branching ideal K of the char-2
// Grigorchuk algebra, according to its first and last letters.
enum class WordShape { a_a, a_t, t_a, t_t };
std::string to_string(WordShape s);

struct SigmaBlockResult {
  WordShape shape       = WordShape::t_t;
  bool      exceptional = false;  // one of CAC, CAD, DAC, DAD
  bool      holds       = false;
};

WordShape word_shape(std::string const& w);
bool      is_exceptional(std::string const& w);

// Checks at level n >= 2. The K-span at level n may be passed in to avoid
// recomputing it; a word outside K is a precondition violation.
SigmaBlockResult sigma_block_check(algrep::ExprContext const& ctx, std::string const& w, std::size_t n,
                                   algrep::SpanBasis const* k_span = nullptr);

// K = <ADA, AB, BA> at level n.
algrep::SpanBasis branching_ideal(algrep::ExprContext const& ctx, std::size_t n,
                                  linalg::Exec exec = linalg::Exec::parallel);

}  // namespace treealg::present
