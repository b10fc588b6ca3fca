#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "treealg/algrep/algebra.hpp"

namespace treealg::algrep {

// Syntax tree of the element-expression grammar
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*'? factor)*
//   factor := atom ('^' uint)?
//   atom   := integer | name | '(' expr ')'
// with an optional leading '-' on a term. A name is a generator, a
// generator followed by ', or a defined macro; a run of juxtaposed names
// such as "CACAC" or "adacac" is read as their product and forms a single
// atom, so "ad^4" means (ad)^4.
class Expr {
 public:
  enum class Kind { number, symbol, sum, product, power };

  static Expr number(exact::BigInt value);
  static Expr symbol(std::string name, bool inverse = false);
  static Expr sum(std::vector<std::pair<bool, Expr>> terms);  // bool: negated
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, std::uint64_t exponent);

  Kind                                     kind() const noexcept;
  exact::BigInt const&                     value() const;
  std::string const&                       name() const;
  bool                                     inverse() const;
  std::vector<std::pair<bool, Expr>> const& terms() const;
  std::vector<Expr> const&                 factors() const;
  Expr const&                              base() const;
  std::uint64_t                            exponent() const;

  // Fully parenthesised only where precedence requires it.
  std::string to_string() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<Node const> node) : _node(std::move(node)) {}
  std::shared_ptr<Node const> _node;
};

// Names, macros and evaluation for one algebra. By default every generator
// is a name, and every single-letter lowercase generator g also gets the
// uppercase macro G = g - 1 unless that name is taken.
class ExprContext {
 public:
  explicit ExprContext(Algebra const& algebra);

  Algebra const& algebra() const noexcept { return _alg; }

  void define(std::string const& name, Expr const& value);
  bool is_macro(std::string const& name) const;
  Expr const& macro(std::string const& name) const;
  std::vector<std::string> macro_names() const;

  Expr parse(std::string_view text) const;

  // Symbolic expansion into group words; throws resource-limit once an
  // intermediate result exceeds `term_limit` terms.
  AlgebraElement expand(Expr const& e, std::size_t term_limit = 1U << 16) const;

  // Level-n image, kept as a permutation combination while that stays small
  // and as a dense matrix afterwards.
  LevelMatrix evaluate(Expr const& e, std::size_t n, Exec exec = Exec::parallel) const;

 private:
  Algebra const&              _alg;
  std::map<std::string, Expr> _macros;
};

}  // namespace treealg::algrep
