#include "treealg/algrep/expr.hpp"

#include <cctype>
#include <optional>
#include <variant>

#include "treealg/error.hpp"

namespace treealg::algrep {

using exact::BigInt;
using exact::Scalar;
using permgrp::Permutation;

struct Expr::Node {
  Kind                               kind = Kind::number;
  BigInt                             value;
  std::string                        name;
  bool                               inverse = false;
  std::vector<std::pair<bool, Expr>> terms;
  std::vector<Expr>                  factors;
  std::uint64_t                      exponent = 0;
};

Expr Expr::number(BigInt value) {
  auto n   = std::make_shared<Node>();
  n->kind  = Kind::number;
  n->value = std::move(value);
  return Expr(n);
}

Expr Expr::symbol(std::string name, bool inverse) {
  auto n     = std::make_shared<Node>();
  n->kind    = Kind::symbol;
  n->name    = std::move(name);
  n->inverse = inverse;
  return Expr(n);
}

Expr Expr::sum(std::vector<std::pair<bool, Expr>> terms) {
  if (terms.empty()) {
    throw_invalid("empty sum");
  }
  auto n   = std::make_shared<Node>();
  n->kind  = Kind::sum;
  n->terms = std::move(terms);
  return Expr(n);
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) {
    throw_invalid("empty product");
  }
  if (factors.size() == 1) {
    return factors.front();
  }
  auto n     = std::make_shared<Node>();
  n->kind    = Kind::product;
  n->factors = std::move(factors);
  return Expr(n);
}

Expr Expr::power(Expr base, std::uint64_t exponent) {
  auto n      = std::make_shared<Node>();
  n->kind     = Kind::power;
  n->factors  = {std::move(base)};
  n->exponent = exponent;
  return Expr(n);
}

Expr::Kind Expr::kind() const noexcept { return _node->kind; }
BigInt const& Expr::value() const { return _node->value; }
std::string const& Expr::name() const { return _node->name; }
bool Expr::inverse() const { return _node->inverse; }
std::vector<std::pair<bool, Expr>> const& Expr::terms() const { return _node->terms; }
std::vector<Expr> const& Expr::factors() const { return _node->factors; }
Expr const& Expr::base() const { return _node->factors.front(); }
std::uint64_t Expr::exponent() const { return _node->exponent; }

std::string Expr::to_string() const {
  switch (kind()) {
    case Kind::number:
      return value() < 0 ? "(" + value().get_str() + ")" : value().get_str();
    case Kind::symbol:
      return name() + (inverse() ? "'" : "");
    case Kind::sum: {
      std::string out;
      for (std::size_t i = 0; i < terms().size(); ++i) {
        auto const& [neg, t] = terms()[i];
        if (i == 0) {
          out += neg ? "-" : "";
        } else {
          out += neg ? " - " : " + ";
        }
        out += t.kind() == Kind::sum ? "(" + t.to_string() + ")" : t.to_string();
      }
      return out;
    }
    case Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < factors().size(); ++i) {
        auto const& f = factors()[i];
        out += i == 0 ? "" : "*";
        out += f.kind() == Kind::sum ? "(" + f.to_string() + ")" : f.to_string();
      }
      return out;
    }
    case Kind::power: {
      auto const& b      = base();
      bool const  simple = b.kind() == Kind::symbol || (b.kind() == Kind::number && b.value() >= 0);
      return (simple ? b.to_string() : "(" + b.to_string() + ")") + "^" +
             std::to_string(exponent());
    }
  }
  return {};
}

namespace {

struct Token {
  enum Type { number, ident, op, end } type = end;
  std::string text;
  bool        prime = false;
};

class Parser {
 public:
  Parser(std::string_view text, ExprContext const& ctx) : _text(text), _ctx(ctx) { advance(); }

  Expr parse_all() {
    Expr e = parse_expr();
    if (_tok.type != Token::end) {
      throw_invalid("unexpected '" + _tok.text + "' in expression");
    }
    return e;
  }

 private:
  void advance() {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
      ++_pos;
    }
    _tok = Token{};
    if (_pos == _text.size()) {
      return;
    }
    char const c = _text[_pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto const start = _pos;
      while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
      _tok = Token{Token::number, std::string(_text.substr(start, _pos - start))};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto const start = _pos;
      while (_pos < _text.size() &&
             (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_')) {
        ++_pos;
      }
      _tok = Token{Token::ident, std::string(_text.substr(start, _pos - start))};
      if (_pos < _text.size() && _text[_pos] == '\'') {
        _tok.prime = true;
        ++_pos;
      }
    } else if (std::string_view("+-*^()").find(c) != std::string_view::npos) {
      _tok = Token{Token::op, std::string(1, c)};
      ++_pos;
    } else {
      throw_invalid(std::string("unexpected character '") + c + "' in expression");
    }
  }

  bool is_op(char c) const { return _tok.type == Token::op && _tok.text[0] == c; }

  Expr parse_expr() {
    std::vector<std::pair<bool, Expr>> terms;
    bool                               neg = false;
    if (is_op('-')) {
      neg = true;
      advance();
    }
    terms.emplace_back(neg, parse_term());
    while (is_op('+') || is_op('-')) {
      neg = is_op('-');
      advance();
      terms.emplace_back(neg, parse_term());
    }
    if (terms.size() == 1 && !terms.front().first) {
      return terms.front().second;
    }
    return Expr::sum(std::move(terms));
  }

  Expr parse_term() {
    std::vector<Expr> factors{parse_factor()};
    while (is_op('*') || is_op('(') || _tok.type == Token::ident) {
      if (is_op('*')) {
        advance();
      }
      factors.push_back(parse_factor());
    }
    return Expr::product(std::move(factors));
  }

  Expr parse_factor() {
    Expr base = parse_atom();
    if (is_op('^')) {
      advance();
      if (_tok.type != Token::number) {
        throw_invalid("exponent must be a nonnegative integer");
      }
      auto const k = std::stoull(_tok.text);
      advance();
      return Expr::power(std::move(base), k);
    }
    return base;
  }

  Expr parse_atom() {
    if (_tok.type == Token::number) {
      Expr e = Expr::number(BigInt(_tok.text));
      advance();
      return e;
    }
    if (_tok.type == Token::ident) {
      Expr e = resolve(_tok.text, _tok.prime);
      advance();
      return e;
    }
    if (is_op('(')) {
      advance();
      Expr e = parse_expr();
      if (!is_op(')')) {
        throw_invalid("missing ')' in expression");
      }
      advance();
      return e;
    }
    throw_invalid(_tok.type == Token::end ? "expression ends early"
                                          : "unexpected '" + _tok.text + "' in expression");
  }

  bool known(std::string const& name) const {
    return _ctx.is_macro(name) || _ctx.algebra().recursion().find(name).has_value();
  }

  Expr resolve(std::string const& ident, bool prime) const {
    if (known(ident)) {
      if (prime && _ctx.is_macro(ident)) {
        throw_invalid("cannot invert macro " + ident);
      }
      return Expr::symbol(ident, prime);
    }
    std::vector<Expr> pieces;
    std::size_t       i = 0;
    while (i < ident.size()) {
      std::size_t len = ident.size() - i;
      while (len > 0 && !known(ident.substr(i, len))) {
        --len;
      }
      if (len == 0) {
        throw_not_found("unknown name '" + ident + "' in expression");
      }
      pieces.push_back(Expr::symbol(ident.substr(i, len)));
      i += len;
    }
    if (prime) {
      auto const last = pieces.back().name();
      if (_ctx.is_macro(last)) {
        throw_invalid("cannot invert macro " + last);
      }
      pieces.back() = Expr::symbol(last, true);
    }
    return Expr::product(std::move(pieces));
  }

  std::string_view   _text;
  std::size_t        _pos = 0;
  Token              _tok;
  ExprContext const& _ctx;
};

constexpr std::size_t sparse_limit = 64;

// Level image kept sparse while it has few permutations.
using Value = std::variant<PermCombination, LevelMatrix>;

PermCombination merge(std::vector<std::pair<Scalar, Permutation>> const& raw) {
  std::map<Permutation, Scalar> merged;
  for (auto const& [c, p] : raw) {
    auto it = merged.find(p);
    if (it == merged.end()) {
      merged.emplace(p, c);
    } else {
      it->second += c;
    }
  }
  PermCombination out;
  for (auto const& [p, c] : merged) {
    if (!c.is_zero()) {
      out.emplace_back(c, p);
    }
  }
  return out;
}

class Evaluator {
 public:
  Evaluator(ExprContext const& ctx, std::size_t n, Exec exec) : _ctx(ctx), _n(n), _exec(exec) {}

  LevelMatrix dense(Value const& v) const {
    if (auto const* m = std::get_if<LevelMatrix>(&v)) {
      return *m;
    }
    return _ctx.algebra().evaluate(std::get<PermCombination>(v), _n);
  }

  Value eval(Expr const& e, int depth = 0) const {
    if (depth > 64) {
      throw_invalid("macro definitions nest too deeply");
    }
    auto const& alg   = _ctx.algebra();
    auto const  field = alg.field();
    switch (e.kind()) {
      case Expr::Kind::number: {
        Scalar const c(field, e.value());
        if (c.is_zero()) {
          return PermCombination{};
        }
        return PermCombination{{c, Permutation(degree())}};
      }
      case Expr::Kind::symbol: {
        if (_ctx.is_macro(e.name())) {
          return eval(_ctx.macro(e.name()), depth + 1);
        }
        auto const idx = alg.recursion().index(e.name());
        auto       w   = alg.recursion().symbol_word(selfsim::Symbol{idx, e.inverse()});
        return PermCombination{{Scalar::one(field), alg.word_permutation(w, _n)}};
      }
      case Expr::Kind::sum: {
        std::vector<Value> parts;
        std::size_t        sparse_terms = 0;
        bool               all_sparse   = true;
        for (auto const& [neg, t] : e.terms()) {
          Value v = eval(t, depth);
          if (neg) {
            v = negate(v);
          }
          if (auto const* c = std::get_if<PermCombination>(&v)) {
            sparse_terms += c->size();
          } else {
            all_sparse = false;
          }
          parts.push_back(std::move(v));
        }
        if (all_sparse && sparse_terms <= 4 * sparse_limit) {
          std::vector<std::pair<Scalar, Permutation>> raw;
          for (auto const& v : parts) {
            auto const& c = std::get<PermCombination>(v);
            raw.insert(raw.end(), c.begin(), c.end());
          }
          auto merged = merge(raw);
          if (merged.size() <= sparse_limit) {
            return merged;
          }
        }
        LevelMatrix acc(field, alg.q(), _n);
        for (auto const& v : parts) {
          acc += dense(v);
        }
        return acc;
      }
      case Expr::Kind::product: {
        Value acc = eval(e.factors().front(), depth);
        for (std::size_t i = 1; i < e.factors().size(); ++i) {
          acc = multiply(acc, eval(e.factors()[i], depth));
        }
        return acc;
      }
      case Expr::Kind::power: {
        Value         base   = eval(e.base(), depth);
        Value         result = PermCombination{{Scalar::one(field), Permutation(degree())}};
        std::uint64_t k      = e.exponent();
        while (k > 0) {
          if (k & 1U) {
            result = multiply(result, base);
          }
          k >>= 1U;
          if (k > 0) {
            base = multiply(base, base);
          }
        }
        return result;
      }
    }
    throw_invalid("malformed expression");
  }

 private:
  std::size_t degree() const {
    return static_cast<std::size_t>(permgrp::degree_at_level(_ctx.algebra().q(), _n));
  }

  Value negate(Value const& v) const {
    auto const minus = -Scalar::one(_ctx.algebra().field());
    if (auto const* c = std::get_if<PermCombination>(&v)) {
      PermCombination out;
      for (auto const& [s, p] : *c) {
        out.emplace_back(s * minus, p);
      }
      return out;
    }
    return std::get<LevelMatrix>(v).scaled(minus);
  }

  Value multiply(Value const& a, Value const& b) const {
    auto const* ca = std::get_if<PermCombination>(&a);
    auto const* cb = std::get_if<PermCombination>(&b);
    if (ca != nullptr && cb != nullptr) {
      if (ca->size() * cb->size() <= 4 * sparse_limit) {
        auto c = compose(*ca, *cb);
        if (c.size() <= sparse_limit) {
          return c;
        }
        return _ctx.algebra().evaluate(c, _n);
      }
      return right_multiply(_ctx.algebra().evaluate(*ca, _n), *cb);
    }
    if (ca != nullptr) {
      return left_multiply(*ca, std::get<LevelMatrix>(b));
    }
    if (cb != nullptr) {
      return right_multiply(std::get<LevelMatrix>(a), *cb);
    }
    return std::get<LevelMatrix>(a).multiply(std::get<LevelMatrix>(b), _exec);
  }

  ExprContext const& _ctx;
  std::size_t        _n;
  Exec               _exec;
};

}  // namespace

ExprContext::ExprContext(Algebra const& algebra) : _alg(algebra) {
  auto const& rec = algebra.recursion();
  for (auto const& g : rec.generators()) {
    if (g.name.size() == 1 && std::islower(static_cast<unsigned char>(g.name[0]))) {
      std::string const upper(1, static_cast<char>(std::toupper(static_cast<unsigned char>(g.name[0]))));
      if (!rec.find(upper)) {
        _macros.emplace(upper, Expr::sum({{false, Expr::symbol(g.name)}, {true, Expr::number(1)}}));
      }
    }
  }
}

void ExprContext::define(std::string const& name, Expr const& value) {
  if (_alg.recursion().find(name)) {
    throw_invalid("'" + name + "' already names a generator");
  }
  _macros.insert_or_assign(name, value);
}

bool ExprContext::is_macro(std::string const& name) const { return _macros.count(name) != 0; }

std::vector<std::string> ExprContext::macro_names() const {
  std::vector<std::string> out;
  for (auto const& [k, v] : _macros) {
    out.push_back(k);
  }
  return out;
}

Expr ExprContext::parse(std::string_view text) const { return Parser(text, *this).parse_all(); }

Expr const& ExprContext::macro(std::string const& name) const {
  auto it = _macros.find(name);
  if (it == _macros.end()) {
    throw_not_found("no macro named '" + name + "'");
  }
  return it->second;
}

AlgebraElement ExprContext::expand(Expr const& e, std::size_t term_limit) const {
  auto check = [&](AlgebraElement const& x) {
    if (x.terms().size() > term_limit) {
      throw_resource("symbolic expansion exceeds " + std::to_string(term_limit) + " terms");
    }
    return x;
  };
  switch (e.kind()) {
    case Expr::Kind::number: {
      AlgebraElement x(_alg.field());
      x.add_term(GroupWord{}, Scalar(_alg.field(), e.value()));
      return x;
    }
    case Expr::Kind::symbol:
      if (is_macro(e.name())) {
        return expand(macro(e.name()), term_limit);
      }
      return _alg.generator(_alg.recursion().index(e.name()), e.inverse());
    case Expr::Kind::sum: {
      AlgebraElement x(_alg.field());
      for (auto const& [neg, t] : e.terms()) {
        auto y = expand(t, term_limit);
        x      = neg ? x - y : x + y;
      }
      return check(x);
    }
    case Expr::Kind::product: {
      AlgebraElement x = expand(e.factors().front(), term_limit);
      for (std::size_t i = 1; i < e.factors().size(); ++i) {
        x = check(_alg.multiply(x, expand(e.factors()[i], term_limit)));
      }
      return x;
    }
    case Expr::Kind::power: {
      AlgebraElement const b = expand(e.base(), term_limit);
      AlgebraElement       x = _alg.one();
      for (std::uint64_t k = 0; k < e.exponent(); ++k) {
        x = check(_alg.multiply(x, b));
      }
      return x;
    }
  }
  throw_invalid("malformed expression");
}

LevelMatrix ExprContext::evaluate(Expr const& e, std::size_t n, Exec exec) const {
  Evaluator const ev(*this, n, exec);
  return ev.dense(ev.eval(e));
}

}  // namespace treealg::algrep
