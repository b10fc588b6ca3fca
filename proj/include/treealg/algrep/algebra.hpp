#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "treealg/algrep/level_matrix.hpp"
#include "treealg/exact/field.hpp"
#include "treealg/permgrp/levels.hpp"
#include "treealg/selfsim/recursion.hpp"

namespace treealg::algrep {

using selfsim::GroupWord;

// Finite linear combination of reduced group words; zero coefficients are
// never stored.
class AlgebraElement {
 public:
  explicit AlgebraElement(exact::FieldSpec field) : _field(field) {}

  exact::FieldSpec                            field() const noexcept { return _field; }
  std::map<GroupWord, exact::Scalar> const&   terms() const noexcept { return _terms; }
  bool                                        is_zero() const noexcept { return _terms.empty(); }

  // Adds c * w; `w` must already be reduced.
  void add_term(GroupWord const& w, exact::Scalar const& c);

  AlgebraElement& operator+=(AlgebraElement const& other);
  AlgebraElement& operator-=(AlgebraElement const& other);
  AlgebraElement  scaled(exact::Scalar const& c) const;

  friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) { return a -= b; }
  friend bool operator==(AlgebraElement const& a, AlgebraElement const& b) = default;

 private:
  exact::FieldSpec                   _field;
  std::map<GroupWord, exact::Scalar> _terms;
};

// A sum of scaled permutation matrices at one level, with distinct
// permutations and nonzero coefficients.
using PermCombination = std::vector<std::pair<exact::Scalar, permgrp::Permutation>>;

// The group algebra of a wreath recursion over a field, with evaluation to
// level matrices. Level permutations are cached; all methods are safe to
// call concurrently.
class Algebra {
 public:
  Algebra(selfsim::WreathRecursion rec, exact::FieldSpec field);

  selfsim::WreathRecursion const& recursion() const noexcept { return *_rec; }
  exact::FieldSpec                field() const noexcept { return _field; }
  std::uint32_t                   q() const noexcept { return _rec->q(); }

  AlgebraElement one() const;
  AlgebraElement scalar(std::int64_t c) const;
  AlgebraElement word(GroupWord const& w) const;  // reduces w
  AlgebraElement generator(std::uint32_t index, bool inverse = false) const;
  AlgebraElement multiply(AlgebraElement const& x, AlgebraElement const& y) const;
  AlgebraElement power(AlgebraElement const& x, std::uint64_t k) const;
  std::string    format(AlgebraElement const& x) const;

  std::vector<permgrp::Permutation> generator_permutations(std::size_t n) const;
  permgrp::Permutation              word_permutation(GroupWord const& w, std::size_t n) const;

  PermCombination combination(AlgebraElement const& x, std::size_t n) const;
  LevelMatrix     evaluate(AlgebraElement const& x, std::size_t n) const;
  LevelMatrix     evaluate(PermCombination const& c, std::size_t n) const;

 private:
  std::unique_ptr<selfsim::WreathRecursion> _rec;
  exact::FieldSpec                          _field;
  mutable std::mutex                        _mutex;
  mutable std::unique_ptr<permgrp::LevelTower> _tower;
};

// P * m and m * P for a combination P of permutation matrices.
LevelMatrix left_multiply(PermCombination const& p, LevelMatrix const& m);
LevelMatrix right_multiply(LevelMatrix const& m, PermCombination const& p);

// Products of combinations, merged and with zero terms dropped.
PermCombination compose(PermCombination const& a, PermCombination const& b);

}  // namespace treealg::algrep
