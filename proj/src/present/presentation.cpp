#include "treealg/present/presentation.hpp"

#include <map>

#include "treealg/algrep/closure.hpp"
#include "treealg/error.hpp"
#include "treealg/permgrp/levels.hpp"
#include "treealg/selfsim/zoo.hpp"

namespace treealg::present {

using algrep::Expr;
using algrep::LevelMatrix;

namespace {

std::map<std::string, std::string> const& table(Sigma s) {
  static std::map<std::string, std::string> const group{{"a", "aca"}, {"b", "d"}, {"c", "b"}, {"d", "c"}};
  static std::map<std::string, std::string> const char2{{"A", "ACA"}, {"B", "D"}, {"C", "B"}, {"D", "C"}};
  return s == Sigma::char2 ? char2 : group;
}

Expr substitute(Sigma s, Expr const& e) {
  switch (e.kind()) {
    case Expr::Kind::number:
      return e;
    case Expr::Kind::symbol: {
      if (e.inverse()) {
        throw_invalid("the substitution is only defined on positive letters");
      }
      std::vector<Expr> letters;
      for (char c : sigma_image(s, e.name())) {
        letters.push_back(Expr::symbol(std::string(1, c)));
      }
      return letters.size() == 1 ? letters.front() : Expr::product(std::move(letters));
    }
    case Expr::Kind::sum: {
      std::vector<std::pair<bool, Expr>> terms;
      for (auto const& [neg, t] : e.terms()) {
        terms.emplace_back(neg, substitute(s, t));
      }
      return Expr::sum(std::move(terms));
    }
    case Expr::Kind::product: {
      std::vector<Expr> factors;
      for (auto const& f : e.factors()) {
        factors.push_back(substitute(s, f));
      }
      return Expr::product(std::move(factors));
    }
    case Expr::Kind::power:
      return Expr::power(substitute(s, e.base()), e.exponent());
  }
  return e;
}

struct Preset {
  RelatorMode              mode;
  std::string              group;
  std::uint32_t            field_char;
  Sigma                    sigma;
  std::vector<std::string> base;
  std::vector<std::string> seeds;
};

std::map<std::string, Preset> const& presets() {
  static std::map<std::string, Preset> const p{
      {"grigorchuk_group",
       {RelatorMode::group,
        "grigorchuk",
        0,
        Sigma::group,
        {"a^2", "b^2", "c^2", "d^2", "bcd"},
        {"(ad)^4", "(adacac)^4"}}},
      {"grigorchuk_alg_char2",
       {RelatorMode::algebra,
        "grigorchuk",
        2,
        Sigma::char2,
        {"A^2", "B^2", "C^2", "D^2", "B+C+D", "BC", "CB", "BD", "DB", "CD", "DC", "DAD"},
        {"CACACAC", "DACACAD"}}},
      {"grigorchuk_alg_charne2",
       {RelatorMode::algebra,
        "grigorchuk",
        3,
        Sigma::charne2,
        {"a^2-1", "b^2-1", "c^2-1", "d^2-1", "bcd-1"},
        {"(d-1)a(d-1)", "(d-1)a(cacadacac-1)"}}},
  };
  return p;
}

// Parsing only needs the names, so any field will do.
Expr parse_relator(std::string const& text) {
  static algrep::Algebra const alg(selfsim::builtin_group("grigorchuk"), exact::FieldSpec::prime(2));
  return algrep::ExprContext(alg).parse(text);
}

}  // namespace

std::string to_string(Sigma s) {
  switch (s) {
    case Sigma::group:
      return "group_sigma";
    case Sigma::char2:
      return "char2_sigma";
    case Sigma::charne2:
      return "charne2_sigma";
  }
  return {};
}

std::string const& sigma_image(Sigma s, std::string const& letter) {
  auto const& t  = table(s);
  auto const  it = t.find(letter);
  if (it == t.end()) {
    throw_invalid("symbol '" + letter + "' is outside the domain of " + to_string(s));
  }
  return it->second;
}

std::string sigma_apply(Sigma s, std::string const& word, std::size_t n) {
  std::string cur = word;
  for (std::size_t i = 0; i < n; ++i) {
    std::string next;
    for (char c : cur) {
      next += sigma_image(s, std::string(1, c));
    }
    cur = std::move(next);
  }
  return cur;
}

Expr sigma_apply(Sigma s, Expr const& e, std::size_t n) {
  Expr cur = e;
  for (std::size_t i = 0; i < n; ++i) {
    cur = substitute(s, cur);
  }
  return cur;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (auto const& [name, p] : presets()) {
    out.push_back(name);
  }
  return out;
}

RelatorSet generate_relators(std::string const& preset, long depth) {
  auto const it = presets().find(preset);
  if (it == presets().end()) {
    throw_not_found("unknown relator preset '" + preset + "'");
  }
  if (depth < 0) {
    throw_invalid("depth must be nonnegative");
  }
  auto const& p = it->second;
  RelatorSet  r;
  r.preset     = preset;
  r.mode       = p.mode;
  r.group      = p.group;
  r.field_char = p.field_char;
  r.sigma      = p.sigma;
  r.depth      = static_cast<std::size_t>(depth);
  for (auto const& b : p.base) {
    auto e = parse_relator(b);
    r.relators.push_back({e, e.to_string(), "base"});
  }
  for (auto const& seed : p.seeds) {
    auto e = parse_relator(seed);
    for (std::size_t n = 0; n <= r.depth; ++n) {
      auto const origin = n == 0 ? seed : "sigma^" + std::to_string(n) + "(" + seed + ")";
      r.relators.push_back({e, e.to_string(), origin});
      e = substitute(p.sigma, e);
    }
  }
  return r;
}

namespace {

selfsim::GroupWord to_word(selfsim::WreathRecursion const& rec, Expr const& e) {
  switch (e.kind()) {
    case Expr::Kind::number:
      if (e.value() != 1) {
        throw_invalid("group relators may only contain the scalar 1");
      }
      return {};
    case Expr::Kind::symbol:
      return rec.symbol_word({rec.index(e.name()), e.inverse()});
    case Expr::Kind::product: {
      selfsim::GroupWord w;
      for (auto const& f : e.factors()) {
        w = rec.multiply(w, to_word(rec, f));
      }
      return w;
    }
    case Expr::Kind::power:
      return rec.power(to_word(rec, e.base()), e.exponent());
    case Expr::Kind::sum:
      break;
  }
  throw_invalid("group relators must be words, not sums");
}

}  // namespace

RelatorReport check_group_relators(selfsim::WreathRecursion const& rec, std::vector<Relator> const& rels,
                                   std::size_t level_max, linalg::Exec exec) {
  std::vector<selfsim::GroupWord> words;
  for (auto const& r : rels) {
    words.push_back(to_word(rec, r.expr));
  }
  std::vector<std::optional<std::size_t>> fail(rels.size());
  auto const check = [&](std::size_t i) {
    for (std::size_t n = 0; n <= level_max; ++n) {
      if (!permgrp::level_permutation(rec, words[i], n).is_identity()) {
        fail[i] = n;
        return;
      }
    }
  };
  auto const count = static_cast<std::ptrdiff_t>(rels.size());
  if (exec == linalg::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      check(static_cast<std::size_t>(i));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      check(static_cast<std::size_t>(i));
    }
  }
  RelatorReport out;
  out.checked   = rels.size();
  out.level_max = level_max;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (fail[i]) {
      out.violations.push_back({rels[i].text, *fail[i]});
    }
  }
  return out;
}

RelatorReport check_algebra_relators(algrep::ExprContext const& ctx, std::vector<Relator> const& rels,
                                     std::size_t level_max, linalg::Exec exec) {
  std::vector<std::optional<std::size_t>> fail(rels.size());
  auto const check = [&](std::size_t i) {
    for (std::size_t n = 0; n <= level_max; ++n) {
      if (!ctx.evaluate(rels[i].expr, n, linalg::Exec::serial).is_zero()) {
        fail[i] = n;
        return;
      }
    }
  };
  auto const count = static_cast<std::ptrdiff_t>(rels.size());
  if (exec == linalg::Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      check(static_cast<std::size_t>(i));
    }
  } else {
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      check(static_cast<std::size_t>(i));
    }
  }
  RelatorReport out;
  out.checked   = rels.size();
  out.level_max = level_max;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (fail[i]) {
      out.violations.push_back({rels[i].text, *fail[i]});
    }
  }
  return out;
}

std::string to_string(WordShape s) {
  switch (s) {
    case WordShape::a_a:
      return "A/A";
    case WordShape::a_t:
      return "A/T";
    case WordShape::t_a:
      return "T/A";
    case WordShape::t_t:
      return "T/T";
  }
  return {};
}

WordShape word_shape(std::string const& w) {
  if (w.empty() || w.find_first_not_of("ABCD") != std::string::npos) {
    throw_invalid("expected a nonempty word over A, B, C, D");
  }
  bool const first = w.front() == 'A';
  bool const last  = w.back() == 'A';
  if (first) {
    return last ? WordShape::a_a : WordShape::a_t;
  }
  return last ? WordShape::t_a : WordShape::t_t;
}

bool is_exceptional(std::string const& w) {
  return w == "CAC" || w == "CAD" || w == "DAC" || w == "DAD";
}

algrep::SpanBasis branching_ideal(algrep::ExprContext const& ctx, std::size_t n, linalg::Exec exec) {
  std::vector<algrep::AlgebraElement> gens;
  for (auto const* g : {"ADA", "AB", "BA"}) {
    gens.push_back(ctx.expand(ctx.parse(g)));
  }
  return algrep::ideal_closure(ctx.algebra(), gens, n, exec);
}

SigmaBlockResult sigma_block_check(algrep::ExprContext const& ctx, std::string const& w, std::size_t n,
                                   algrep::SpanBasis const* k_span) {
  if (n < 2) {
    throw_invalid("sigma block checks need level at least 2");
  }
  if (!ctx.algebra().field().is_gf2()) {
    throw_invalid("sigma block checks are defined over GF(2)");
  }
  SigmaBlockResult r;
  r.shape       = word_shape(w);
  r.exceptional = is_exceptional(w);

  auto const here = ctx.evaluate(ctx.parse(w), n);
  if (k_span != nullptr) {
    if (k_span->level() != n) {
      throw_invalid("K span is at the wrong level");
    }
    if (!k_span->contains(here)) {
      throw_precondition("word " + w + " does not lie in K");
    }
  } else if (!branching_ideal(ctx, n).contains(here)) {
    throw_precondition("word " + w + " does not lie in K");
  }

  auto const  below = ctx.evaluate(ctx.parse(w), n - 1);
  LevelMatrix want(below.field(), below.q(), n);
  auto const  put = [&](std::uint32_t u, std::uint32_t v, LevelMatrix const& m) {
    want += LevelMatrix::unit_block(u, v, m);
  };
  switch (r.shape) {
    case WordShape::a_a:
      put(0, 0, below);
      put(0, 1, below);
      put(1, 0, below);
      put(1, 1, below);
      break;
    case WordShape::a_t:
      put(0, 1, below);
      put(1, 1, below);
      break;
    case WordShape::t_a:
      put(1, 0, below);
      put(1, 1, below);
      break;
    case WordShape::t_t:
      put(1, 1, below);
      if (r.exceptional) {
        put(0, 0, ctx.evaluate(ctx.parse("ADA"), n - 1));
      }
      break;
  }
  r.holds = ctx.evaluate(ctx.parse(sigma_apply(Sigma::char2, w, 1)), n) == want;
  return r;
}

}  // namespace treealg::present
