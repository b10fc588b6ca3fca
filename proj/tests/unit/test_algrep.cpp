#include <catch2/catch.hpp>

#include <algorithm>
#include <optional>
#include <random>

#include "treealg/algrep/closure.hpp"
#include "treealg/algrep/expr.hpp"
#include "treealg/algrep/nil.hpp"
#include "treealg/error.hpp"
#include "treealg/selfsim/zoo.hpp"

using namespace treealg;
using namespace treealg::algrep;
using exact::FieldSpec;

namespace {

Algebra grig(std::uint32_t p) {
  return Algebra(selfsim::builtin_group("grigorchuk"), p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p));
}

std::vector<AlgebraElement> parse_all(ExprContext const& ctx, std::vector<std::string> const& xs) {
  std::vector<AlgebraElement> out;
  for (auto const& x : xs) {
    out.push_back(ctx.expand(ctx.parse(x)));
  }
  return out;
}

AlgebraElement random_element(Algebra const& alg, std::mt19937_64& rng) {
  AlgebraElement x(alg.field());
  auto const     terms = 1 + rng() % 4;
  for (std::size_t t = 0; t < terms; ++t) {
    auto w = alg.scalar(static_cast<std::int64_t>(rng() % 7) - 3);
    for (std::size_t k = rng() % 6; k > 0; --k) {
      w = alg.multiply(w, alg.generator(static_cast<std::uint32_t>(rng() % alg.recursion().rank())));
    }
    x += w;
  }
  return x;
}

template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("small evaluations", "[algrep]") {
  auto       alg = grig(2);
  ExprContext ctx(alg);
  CHECK(ctx.evaluate(ctx.parse("B"), 1).is_zero());
  CHECK(!ctx.evaluate(ctx.parse("A"), 1).is_zero());
  CHECK(ctx.evaluate(ctx.parse("1"), 3) == LevelMatrix::identity(alg.field(), 2, 3));
  for (std::size_t n = 1; n <= 6; ++n) {
    CHECK(ctx.evaluate(ctx.parse("B+C+D"), n).is_zero());
    CHECK(ctx.evaluate(ctx.parse("A^2"), n).is_zero());
    CHECK(ctx.evaluate(ctx.parse("DAD"), n).is_zero());
  }
}

TEST_CASE("evaluation is a homomorphism", "[algrep][property]") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2U, 3U, 0U}) {
    auto alg = grig(p);
    for (int t = 0; t < (p == 2 ? 400 : 300); ++t) {
      auto const x = random_element(alg, rng);
      auto const y = random_element(alg, rng);
      auto const n = 1 + rng() % 5;
      auto sum     = x;
      sum += y;
      CHECK(alg.evaluate(alg.multiply(x, y), n) == alg.evaluate(x, n).multiply(alg.evaluate(y, n)));
      auto ex = alg.evaluate(x, n);
      ex += alg.evaluate(y, n);
      CHECK(alg.evaluate(sum, n) == ex);
    }
  }
}

TEST_CASE("grigorchuk algebra dimensions", "[algrep]") {
  auto gf2 = grig(2);
  std::vector<std::size_t> const b{1, 2, 6, 22, 78, 302};
  for (std::size_t n = 0; n < b.size(); ++n) {
    CHECK(algebra_dimension(gf2, n) == b[n]);
  }
  std::vector<std::size_t> const c{1, 2, 6, 22, 86};
  for (std::uint32_t p : {3U, 0U}) {
    auto alg = grig(p);
    for (std::size_t n = 0; n < c.size(); ++n) {
      CHECK(algebra_dimension(alg, n) == c[n]);
    }
  }
  CHECK(error_kind([&] { algebra_dimension(gf2, 8); }) == ErrorKind::resource_limit);
}

TEST_CASE("dimensions are nondecreasing and truncation lands in the span", "[algrep][property]") {
  for (std::uint32_t p : {2U, 3U}) {
    auto        alg  = grig(p);
    std::size_t prev = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const hi = algebra_span(alg, n);
      auto const lo = algebra_span(alg, n - 1);
      CHECK(hi.dim() >= prev);
      prev = hi.dim();
      for (auto const& r : hi.rows()) {
        CHECK(lo.contains(truncate(r)));
      }
    }
  }
}

TEST_CASE("closure does not depend on the seed order", "[algrep][property]") {
  auto       alg = grig(2);
  ExprContext ctx(alg);
  auto const gens = parse_all(ctx, {"ADA", "AB", "BA"});
  std::vector<LevelMatrix> seeds;
  for (auto const& g : gens) {
    seeds.push_back(alg.evaluate(g, 5));
  }
  SpanBasis fwd(alg.field(), 2, 5);
  close_under_generators(alg, fwd, seeds, Side::both);
  std::reverse(seeds.begin(), seeds.end());
  SpanBasis rev(alg.field(), 2, 5, Exec::serial);
  close_under_generators(alg, rev, seeds, Side::both);
  REQUIRE(fwd.dim() == rev.dim());
  for (auto const& r : fwd.rows()) {
    CHECK(rev.contains(r));
  }
}

TEST_CASE("hausdorff normalisations", "[algrep]") {
  auto const m = algebra_hausdorff_sequence(grig(2), 4);
  CHECK(m.back() == exact::make_rational(234, 256));
  auto const c = algebra_hausdorff_sequence(grig(3), 4, HausdorffNorm::closure);
  for (auto const& r : c) {
    CHECK(r == 1);
  }
  auto const c2 = algebra_hausdorff_sequence(grig(2), 5, HausdorffNorm::closure);
  CHECK(c2[4] == exact::make_rational(3 * 302, 1026));
}

TEST_CASE("char 2 augmentation filtration", "[algrep]") {
  auto       alg = grig(2);
  ExprContext ctx(alg);
  auto const letters = parse_all(ctx, {"A", "B", "C", "D"});
  auto const ball    = filtration_dims(alg, letters, 12, {FiltrationMode::ball, 3});
  auto const power   = filtration_dims(alg, letters, 8, {FiltrationMode::power, 3});
  REQUIRE(ball.stable);
  REQUIRE(power.stable);
  std::vector<std::size_t> const a{1, 3, 4, 5, 6, 8, 10, 11, 12, 14, 16, 18, 20};
  CHECK(ball.a == a);
  CHECK(power.a == std::vector<std::size_t>(a.begin(), a.begin() + 9));
  for (std::size_t n = 3; 2 * n + 1 <= 12; ++n) {
    CHECK(a[2 * n] == 2 * a[n]);
    CHECK(a[2 * n + 1] == a[n] + a[n + 1]);
  }
  auto const gf3 = grig(3);
  CHECK(error_kind([&] { filtration_at_level(gf3, {gf3.generator(0)}, 3, 2, FiltrationMode::power); }) ==
        ErrorKind::invalid_argument);
}

TEST_CASE("char 3 S-ball filtration prefix", "[algrep]") {
  auto                        alg = grig(3);
  std::vector<AlgebraElement> gens;
  for (std::uint32_t i = 0; i < 4; ++i) {
    gens.push_back(alg.generator(i));
  }
  auto const r = filtration_dims(alg, gens, 6, {FiltrationMode::ball, 2});
  REQUIRE(r.stable);
  CHECK(r.a == std::vector<std::size_t>{1, 4, 6, 8, 10, 13, 16});
}

TEST_CASE("char 2 branching ideal", "[algrep]") {
  auto       alg = grig(2);
  ExprContext ctx(alg);
  auto const r = ideal_quotient_dims(alg, parse_all(ctx, {"ADA", "AB", "BA"}), 3, 6);
  REQUIRE(r.stable);
  CHECK(r.codim == 6);
  CHECK(r.k_over_k2 == 12);
  CHECK(r.k_over_mxk == 8);
  CHECK(r.block_inside);
  CHECK(ideal_closure(alg, {}, 3).dim() == 0);
}

TEST_CASE("filtration subspace relations", "[algrep]") {
  auto        alg = grig(2);
  ExprContext ctx(alg);
  BranchSetup setup{alg, parse_all(ctx, {"A", "B", "C", "D"}), parse_all(ctx, {"ADA", "AB", "BA"})};
  auto const  rel = [&](char const* l, char const* r) {
    return subspace_relation(setup, SubspaceSpec::parse(l), SubspaceSpec::parse(r), 5);
  };
  CHECK(rel("varpi^3", "K") != Relation::neither);
  CHECK(rel("K", "varpi^2") != Relation::neither);
  CHECK(rel("varpi^1", "varpi^1") == Relation::equal);
  CHECK(rel("varpi^2", "K") == Relation::neither);
  CHECK(SubspaceSpec::parse("M_{X^2}(K)").exponent == 2);
  CHECK(SubspaceSpec::parse("MXK").kind == SubspaceSpec::Kind::block);
  CHECK(error_kind([] { SubspaceSpec::parse("Q^2"); }) == ErrorKind::invalid_argument);
}

TEST_CASE("nil degrees and product identities", "[algrep][nil]") {
  auto        alg = grig(2);
  ExprContext ctx(alg);
  auto const  e = [&](char const* s) { return ctx.expand(ctx.parse(s)); };
  CHECK(nil_degree(alg, e("A"), 16).degree == 2U);
  CHECK(nil_degree(alg, e("(1+A)(B+C)"), 16).degree == 2U);
  auto const x = e("1+A+B+AD");
  CHECK_FALSE(nil_degree(alg, x, 16, 10).degree);
  CHECK(product_identity_check(alg, alg.multiply(x, e("(1+B)(1+AC)(1+ACAC)(1+A)")), alg.one(), 10).holds);
  CHECK(product_identity_check(alg, e("B+C+D"), alg.scalar(0), 10).holds);
  auto const a = product_identity_check(alg, e("A"), alg.scalar(0), 1);
  CHECK_FALSE(a.holds);
  CHECK(a.first_failure == 1U);
  auto const d = distinct_powers(alg, x, 16, 12);
  REQUIRE(d);
  CHECK(*d <= 12);
  CHECK_FALSE(distinct_powers(alg, alg.one(), 2, 6));
}

TEST_CASE("odometer powers separate at level 4", "[algrep][nil]") {
  Algebra alg(selfsim::builtin_group("odometer"), FieldSpec::prime(2));
  CHECK(distinct_powers(alg, alg.generator(0), 10, 8) == 4U);
}

TEST_CASE("monomials of length at most 7 are nil of degree 8", "[algrep][nil]") {
  auto       alg = grig(2);
  auto const s   = monomial_nil_survey(alg, 7, 8, 6, Exec::serial);
  auto const p   = monomial_nil_survey(alg, 7, 8, 6, Exec::parallel);
  CHECK(s.words == 4 * (2187 - 1) / 2);
  CHECK(s.nil == s.words);
  CHECK(s.failures.empty());
  CHECK(s.max_degree <= 8);
  CHECK(p.words == s.words);
  CHECK(p.nil == s.nil);
  CHECK(p.zero_words == s.zero_words);
  CHECK(p.max_degree == s.max_degree);
}

TEST_CASE("graded elements of degree one", "[algrep][nil]") {
  auto const r = graded_nil_sample(grig(2), 1, 0, 0, 6);
  CHECK(r.trials == 7);
  CHECK(r.passed == 7);
  CHECK(r.max_observed <= 72);
  auto const again = graded_nil_sample(grig(2), 2, 10, 42, 5);
  CHECK(again.observed == graded_nil_sample(grig(2), 2, 10, 42, 5).observed);
}

TEST_CASE("branching block identities", "[algrep][nil]") {
  auto const ids = branch_block_identity(grig(2), 4);
  REQUIRE(ids.size() == 3);
  CHECK(ids[0].printed);
  for (auto const& id : ids) {
    CHECK(id.corner);
  }
}
