#include "treealg/algrep/algebra.hpp"

#include "treealg/error.hpp"

namespace treealg::algrep {

using exact::Scalar;
using permgrp::Permutation;

void AlgebraElement::add_term(GroupWord const& w, Scalar const& c) {
  if (c.field() != _field) {
    throw_invalid("coefficient field does not match the element");
  }
  auto it = _terms.find(w);
  if (it == _terms.end()) {
    if (!c.is_zero()) {
      _terms.emplace(w, c);
    }
    return;
  }
  it->second += c;
  if (it->second.is_zero()) {
    _terms.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(AlgebraElement const& other) {
  if (other._field != _field) {
    throw_invalid("elements over different fields");
  }
  for (auto const& [w, c] : other._terms) {
    add_term(w, c);
  }
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(AlgebraElement const& other) {
  return *this += other.scaled(-Scalar::one(_field));
}

AlgebraElement AlgebraElement::scaled(Scalar const& c) const {
  AlgebraElement out(_field);
  for (auto const& [w, x] : _terms) {
    out.add_term(w, x * c);
  }
  return out;
}

Algebra::Algebra(selfsim::WreathRecursion rec, exact::FieldSpec field)
    : _rec(std::make_unique<selfsim::WreathRecursion>(std::move(rec))), _field(field),
      _tower(std::make_unique<permgrp::LevelTower>(*_rec)) {}

AlgebraElement Algebra::one() const { return scalar(1); }

AlgebraElement Algebra::scalar(std::int64_t c) const {
  AlgebraElement x(_field);
  x.add_term(GroupWord{}, Scalar(_field, c));
  return x;
}

AlgebraElement Algebra::word(GroupWord const& w) const {
  AlgebraElement x(_field);
  x.add_term(_rec->reduce(w), Scalar::one(_field));
  return x;
}

AlgebraElement Algebra::generator(std::uint32_t index, bool inverse) const {
  if (index >= _rec->rank()) {
    throw_invalid("generator index out of range");
  }
  return word(_rec->symbol_word(selfsim::Symbol{index, inverse}));
}

AlgebraElement Algebra::multiply(AlgebraElement const& x, AlgebraElement const& y) const {
  AlgebraElement out(_field);
  for (auto const& [u, a] : x.terms()) {
    for (auto const& [v, b] : y.terms()) {
      out.add_term(_rec->multiply(u, v), a * b);
    }
  }
  return out;
}

AlgebraElement Algebra::power(AlgebraElement const& x, std::uint64_t k) const {
  AlgebraElement out = one();
  for (std::uint64_t i = 0; i < k; ++i) {
    out = multiply(out, x);
  }
  return out;
}

std::string Algebra::format(AlgebraElement const& x) const {
  if (x.is_zero()) {
    return "0";
  }
  std::string out;
  for (auto const& [w, c] : x.terms()) {
    if (!out.empty()) {
      out += " + ";
    }
    if (w.empty()) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += _rec->format(w);
    } else {
      out += c.to_string() + "*" + _rec->format(w);
    }
  }
  return out;
}

std::vector<Permutation> Algebra::generator_permutations(std::size_t n) const {
  std::lock_guard lock(_mutex);
  return _tower->generators(n);
}

Permutation Algebra::word_permutation(GroupWord const& w, std::size_t n) const {
  std::lock_guard lock(_mutex);
  return _tower->word(w, n);
}

PermCombination Algebra::combination(AlgebraElement const& x, std::size_t n) const {
  if (x.field() != _field) {
    throw_invalid("element field does not match the algebra");
  }
  std::map<Permutation, Scalar> merged;
  for (auto const& [w, c] : x.terms()) {
    auto p  = word_permutation(w, n);
    auto it = merged.find(p);
    if (it == merged.end()) {
      merged.emplace(std::move(p), c);
    } else {
      it->second += c;
    }
  }
  PermCombination out;
  for (auto& [p, c] : merged) {
    if (!c.is_zero()) {
      out.emplace_back(c, p);
    }
  }
  return out;
}

LevelMatrix Algebra::evaluate(PermCombination const& c, std::size_t n) const {
  LevelMatrix m(_field, q(), n);
  for (auto const& [s, p] : c) {
    m.add_permutation(s, p);
  }
  return m;
}

LevelMatrix Algebra::evaluate(AlgebraElement const& x, std::size_t n) const {
  return evaluate(combination(x, n), n);
}

LevelMatrix left_multiply(PermCombination const& p, LevelMatrix const& m) {
  LevelMatrix out(m.field(), m.q(), m.level());
  for (auto const& [c, g] : p) {
    out += (g.is_identity() ? m : m.left_permuted(g)).scaled(c);
  }
  return out;
}

LevelMatrix right_multiply(LevelMatrix const& m, PermCombination const& p) {
  LevelMatrix out(m.field(), m.q(), m.level());
  for (auto const& [c, g] : p) {
    out += (g.is_identity() ? m : m.right_permuted(g)).scaled(c);
  }
  return out;
}

PermCombination compose(PermCombination const& a, PermCombination const& b) {
  std::map<Permutation, Scalar> merged;
  for (auto const& [x, g] : a) {
    for (auto const& [y, h] : b) {
      auto p  = g * h;
      auto it = merged.find(p);
      if (it == merged.end()) {
        merged.emplace(std::move(p), x * y);
      } else {
        it->second += x * y;
      }
    }
  }
  PermCombination out;
  for (auto& [p, c] : merged) {
    if (!c.is_zero()) {
      out.emplace_back(c, p);
    }
  }
  return out;
}

}  // namespace treealg::algrep
