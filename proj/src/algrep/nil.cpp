#include "treealg/algrep/nil.hpp"

#include <algorithm>
#include <random>

#include "treealg/algrep/expr.hpp"
#include "treealg/error.hpp"

namespace treealg::algrep {

using exact::Scalar;

std::size_t nil_level_cap(exact::FieldSpec field) { return field.is_rational() ? 5 : 8; }

std::optional<std::uint64_t> matrix_nil_degree(LevelMatrix const& m, std::uint64_t max_pow, Exec exec) {
  LevelMatrix p = m;
  for (std::uint64_t k = 1; k <= max_pow; ++k) {
    if (p.is_zero()) {
      return k;
    }
    if (k >= m.size()) {
      return std::nullopt;
    }
    p = p.multiply(m, exec);
  }
  return std::nullopt;
}

NilReport nil_degree(Algebra const& alg, AlgebraElement const& x, std::uint64_t max_pow,
                     std::size_t level_cap, Exec exec) {
  if (max_pow < 1) {
    throw_invalid("max_pow must be at least 1");
  }
  if (level_cap == 0) {
    level_cap = nil_level_cap(alg.field());
  }
  NilReport r;
  bool      nil = true;
  for (std::size_t n = 1; n <= level_cap; ++n) {
    r.per_level.push_back(matrix_nil_degree(alg.evaluate(x, n), max_pow, exec));
    nil = nil && r.per_level.back().has_value();
  }
  if (!nil) {
    return r;
  }
  r.degree = *std::max_element(r.per_level.begin(), r.per_level.end());
  for (std::size_t i = 0; i < r.per_level.size(); ++i) {
    if (r.per_level[i] == r.degree) {
      r.stable_level = i + 1;
      break;
    }
  }
  return r;
}

IdentityReport product_identity_check(Algebra const& alg, AlgebraElement const& lhs,
                                      AlgebraElement const& rhs, std::size_t n_max, Exec) {
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (!(alg.evaluate(lhs, n) == alg.evaluate(rhs, n))) {
      return {false, n};
    }
  }
  return {};
}

std::optional<std::size_t> distinct_powers(Algebra const& alg, AlgebraElement const& x, std::uint64_t k_max,
                                           std::size_t n_cap, Exec exec) {
  if (k_max < 2) {
    throw_invalid("k_max must be at least 2");
  }
  for (std::size_t n = 0; n <= n_cap; ++n) {
    auto const               m = alg.evaluate(x, n);
    std::vector<LevelMatrix> pows{LevelMatrix::identity(alg.field(), alg.q(), n)};
    bool                     distinct = true;
    for (std::uint64_t i = 1; i <= k_max && distinct; ++i) {
      pows.push_back(pows.back().multiply(m, exec));
      distinct = std::none_of(pows.begin(), pows.end() - 1,
                              [&](LevelMatrix const& p) { return p == pows.back(); });
    }
    if (distinct) {
      return n;
    }
  }
  return std::nullopt;
}

namespace {

void require_grigorchuk_letters(ExprContext const& ctx, std::initializer_list<char const*> names) {
  for (auto const* s : names) {
    if (!ctx.is_macro(s)) {
      throw_invalid(std::string("the algebra has no letter ") + s);
    }
  }
}

std::vector<std::string> words_over(std::string const& alphabet, std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (auto const& w : out) {
      for (char c : alphabet) {
        next.push_back(w + c);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

GradedNilReport graded_nil_sample(Algebra const& alg, std::size_t degree, std::size_t trials,
                                  std::uint64_t seed, std::size_t level_cap, Exec exec) {
  if (!alg.field().is_gf2()) {
    throw_invalid("graded nil sampling is defined over GF(2)");
  }
  if (degree < 1 || degree > 3) {
    throw_invalid("degree must be 1, 2 or 3");
  }
  ExprContext ctx(alg);
  require_grigorchuk_letters(ctx, {"A", "B", "D"});
  auto const words = words_over("ABD", degree);

  std::vector<std::uint64_t> masks;
  if (trials == 0) {
    if (degree != 1) {
      throw_invalid("exhaustive mode is only offered in degree 1");
    }
    for (std::uint64_t m = 1; m < 8; ++m) {
      masks.push_back(m);
    }
  } else {
    std::mt19937_64     rng(seed);
    std::uint64_t const full = (std::uint64_t{1} << words.size()) - 1;
    while (masks.size() < trials) {
      if (auto const m = rng() & full; m != 0) {
        masks.push_back(m);
      }
    }
  }

  GradedNilReport r;
  r.degree             = degree;
  r.trials             = masks.size();
  std::uint64_t const bound = 72 * degree;
  for (auto const mask : masks) {
    std::string text;
    for (std::size_t i = 0; i < words.size(); ++i) {
      if ((mask >> i) & 1U) {
        text += (text.empty() ? "" : "+") + words[i];
      }
    }
    auto const nil = nil_degree(alg, ctx.expand(ctx.parse(text)), bound, level_cap, exec);
    r.observed.push_back(nil.degree.value_or(0));
    if (nil.degree) {
      ++r.passed;
      r.max_observed = std::max(r.max_observed, *nil.degree);
    } else {
      r.failures.push_back(text);
    }
  }
  return r;
}

namespace {

struct Survey {
  Algebra const&                         alg;
  std::vector<permgrp::Permutation> const& perms;  // letters A..D as x - 1
  std::size_t                            max_len;
  std::uint64_t                          power;
  Exec                                   exec;

  static constexpr std::size_t max_failures = 20;

  std::size_t subtree(std::size_t len) const {
    std::size_t total = 0;
    std::size_t layer = 1;
    for (std::size_t l = len + 1; l <= max_len; ++l) {
      layer *= 3;
      total += layer;
    }
    return total;
  }

  void visit(std::string const& word, LevelMatrix const& m, MonomialSurvey& out) const {
    ++out.words;
    if (m.is_zero()) {
      auto const below = subtree(word.size());
      out.words += below;
      out.nil += 1 + below;
      out.zero_words += 1 + below;
      return;
    }
    LevelMatrix   p = m;
    std::uint64_t k = 1;
    while (k < power && !p.is_zero()) {
      p = p.multiply(p, exec);
      k *= 2;
    }
    if (p.is_zero()) {
      ++out.nil;
      out.max_degree = std::max<std::uint64_t>(out.max_degree, k);
    } else if (out.failures.size() < max_failures) {
      out.failures.push_back(word);
    }
    if (word.size() == max_len) {
      return;
    }
    for (std::size_t y = 0; y < perms.size(); ++y) {
      char const c = static_cast<char>('A' + y);
      if (c != word.front()) {
        visit(c + word, m.left_permuted(perms[y]) - m, out);
      }
    }
  }
};

void merge(MonomialSurvey& into, MonomialSurvey const& part) {
  into.words += part.words;
  into.nil += part.nil;
  into.zero_words += part.zero_words;
  into.max_degree = std::max(into.max_degree, part.max_degree);
  for (auto const& f : part.failures) {
    if (into.failures.size() < Survey::max_failures) {
      into.failures.push_back(f);
    }
  }
}

}  // namespace

MonomialSurvey monomial_nil_survey(Algebra const& alg, std::size_t max_len, std::uint64_t power,
                                   std::size_t level, Exec exec) {
  if (power < 1 || (power & (power - 1)) != 0) {
    throw_invalid("the survey power must be a power of two");
  }
  if (alg.recursion().rank() != 4) {
    throw_invalid("the monomial survey needs the four letters A, B, C, D");
  }
  ExprContext ctx(alg);
  require_grigorchuk_letters(ctx, {"A", "B", "C", "D"});
  std::vector<permgrp::Permutation> perms;
  for (auto const* s : {"a", "b", "c", "d"}) {
    auto const c = alg.combination(ctx.expand(ctx.parse(s)), level);
    perms.push_back(c.front().second);
  }
  Survey const   survey{alg, perms, max_len, power, Exec::serial};
  auto const     one = LevelMatrix::identity(alg.field(), alg.q(), level);
  MonomialSurvey total;
  if (max_len == 0) {
    return total;
  }

  std::vector<std::pair<std::string, LevelMatrix>> roots;
  for (std::size_t x = 0; x < 4; ++x) {
    roots.emplace_back(std::string(1, static_cast<char>('A' + x)), one.left_permuted(perms[x]) - one);
  }
  if (exec == Exec::serial) {
    for (auto const& [w, m] : roots) {
      survey.visit(w, m, total);
    }
    return total;
  }

  // Parallel: the single letters are handled here, each two-letter word
  // roots an independent subtree.
  std::vector<std::pair<std::string, LevelMatrix>> seconds;
  for (auto const& [w, m] : roots) {
    Survey const   leaf{alg, perms, 1, power, Exec::serial};
    MonomialSurvey part;
    leaf.visit(w, m, part);
    merge(total, part);
    if (max_len < 2) {
      continue;
    }
    for (std::size_t y = 0; y < 4; ++y) {
      char const c = static_cast<char>('A' + y);
      if (c != w.front()) {
        seconds.emplace_back(c + w, m.left_permuted(perms[y]) - m);
      }
    }
  }
  std::vector<MonomialSurvey> parts(seconds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < seconds.size(); ++i) {
    survey.visit(seconds[i].first, seconds[i].second, parts[i]);
  }
  for (auto const& p : parts) {
    merge(total, p);
  }
  return total;
}

std::vector<BlockIdentity> branch_block_identity(Algebra const& alg, std::size_t n) {
  if (n < 2) {
    throw_invalid("block identities need level at least 2");
  }
  ExprContext ctx(alg);
  require_grigorchuk_letters(ctx, {"A", "B", "C", "D"});
  std::vector<BlockIdentity> out{{"CACAC", "ADA"}, {"CADA", "AB"}, {"ADAC", "BA"}};
  for (auto& id : out) {
    auto const lhs = ctx.evaluate(ctx.parse(id.lhs), n);
    auto const rhs = ctx.evaluate(ctx.parse(id.rhs), n - 1);
    id.printed     = lhs == LevelMatrix::unit_block(0, 0, rhs);
    id.corner      = lhs.block(0, 0) == rhs;
  }
  return out;
}

}  // namespace treealg::algrep
