#include <catch2/catch.hpp>

#include <fstream>
#include <random>
#include <sstream>

#include "treealg/error.hpp"
#include "treealg/present/presentation.hpp"
#include "treealg/selfsim/zoo.hpp"

using namespace treealg;
using namespace treealg::present;
using algrep::Algebra;
using algrep::ExprContext;
using exact::FieldSpec;

namespace {

template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind();
  }
  return std::nullopt;
}

Algebra grig(std::uint32_t p) { return Algebra(selfsim::builtin_group("grigorchuk"), FieldSpec::prime(p)); }

std::vector<std::string> read_lines(std::string const& path) {
  std::ifstream            in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("substitution on words", "[present]") {
  CHECK(sigma_apply(Sigma::group, "ad", 1) == "acac");
  CHECK(sigma_apply(Sigma::group, "abcd", 0) == "abcd");
  CHECK(sigma_apply(Sigma::char2, "CACACAC", 1) == "BACABACABACAB");
  CHECK(sigma_apply(Sigma::char2, "D", 3) == "D");
  for (std::size_t n = 0; n <= 8; ++n) {
    CHECK(sigma_apply(Sigma::group, "ad", n).size() == (std::size_t{2} << n));
  }
  CHECK(error_kind([] { sigma_apply(Sigma::group, "ax", 1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("substitution is linear on expressions", "[present][property]") {
  auto            alg = grig(3);
  ExprContext     ctx(alg);
  std::mt19937_64 rng(7);
  auto const      word = [&] {
    std::string w;
    for (auto len = 1 + rng() % 6; len > 0; --len) {
      w += "abcd"[rng() % 4];
    }
    return w;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto const u = word(), v = word();
    auto const n = static_cast<std::size_t>(rng() % 3);
    auto const lhs = ctx.expand(sigma_apply(Sigma::charne2, ctx.parse(u + " - 2*" + v + " + 1"), n));
    auto const rhs =
        ctx.expand(ctx.parse(sigma_apply(Sigma::group, u, n) + " - 2*" + sigma_apply(Sigma::group, v, n) + " + 1"));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("relator presets", "[present]") {
  CHECK(preset_names() ==
        std::vector<std::string>{"grigorchuk_alg_char2", "grigorchuk_alg_charne2", "grigorchuk_group"});
  auto const g = generate_relators("grigorchuk_group", 3);
  CHECK(g.relators.size() == 5 + 2 * 4);
  CHECK(g.relators[5].text == "(a*d)^4");
  CHECK(g.relators[6].origin == "sigma^1((ad)^4)");
  CHECK(error_kind([] { generate_relators("nosuch", 1); }) == ErrorKind::not_found);
  CHECK(error_kind([] { generate_relators("grigorchuk_group", -1); }) == ErrorKind::invalid_argument);
}

TEST_CASE("relator texts match the golden files", "[present]") {
  std::string const dir = TREEALG_DATA_DIR "/relators/";
  for (auto const& [preset, depth, file] :
       {std::tuple{"grigorchuk_group", 3, "grigorchuk_group.d3.txt"},
        std::tuple{"grigorchuk_alg_char2", 4, "grigorchuk_alg_char2.d4.txt"},
        std::tuple{"grigorchuk_alg_charne2", 3, "grigorchuk_alg_charne2.d3.txt"}}) {
    std::vector<std::string> texts;
    for (auto const& r : generate_relators(preset, depth).relators) {
      texts.push_back(r.text);
    }
    CHECK(texts == read_lines(dir + file));
  }
}

TEST_CASE("group and char 2 relators hold", "[present]") {
  auto const rec = selfsim::builtin_group("grigorchuk");
  auto const g   = generate_relators("grigorchuk_group", 2);
  CHECK(check_group_relators(rec, g.relators, 8).ok());

  auto        alg = grig(2);
  ExprContext ctx(alg);
  auto const  a = generate_relators("grigorchuk_alg_char2", 3);
  auto const  s = check_algebra_relators(ctx, a.relators, 7, linalg::Exec::serial);
  auto const  p = check_algebra_relators(ctx, a.relators, 7, linalg::Exec::parallel);
  CHECK(s.ok());
  CHECK(p.ok());
  CHECK(s.checked == 12 + 2 * 4);
}

TEST_CASE("char 3 relators at depth zero hold", "[present]") {
  auto        alg = grig(3);
  ExprContext ctx(alg);
  CHECK(check_algebra_relators(ctx, generate_relators("grigorchuk_alg_charne2", 0).relators, 5).ok());
}

TEST_CASE("violations report the first failing level", "[present]") {
  auto        alg = grig(2);
  ExprContext ctx(alg);
  std::vector<Relator> rels{{ctx.parse("A*B"), "A*B", "given"}, {ctx.parse("B+C+D"), "B+C+D", "given"}};
  auto const           r = check_algebra_relators(ctx, rels, 5);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].text == "A*B");
  CHECK(r.violations[0].level == 2);

  auto const rec = selfsim::builtin_group("grigorchuk");
  std::vector<Relator> words{{ctx.parse("(ad)^2"), "(ad)^2", "given"}};
  CHECK(check_group_relators(rec, words, 4).violations.at(0).level == 3);
}

TEST_CASE("sigma block shapes", "[present]") {
  CHECK(word_shape("ADA") == WordShape::a_a);
  CHECK(word_shape("AB") == WordShape::a_t);
  CHECK(word_shape("BA") == WordShape::t_a);
  CHECK(word_shape("CAD") == WordShape::t_t);
  CHECK(is_exceptional("DAC"));
  CHECK_FALSE(is_exceptional("BAB"));
  CHECK(error_kind([] { word_shape("AX"); }) == ErrorKind::invalid_argument);

  auto        alg = grig(2);
  ExprContext ctx(alg);
  auto const  k = branching_ideal(ctx, 4);
  for (auto const* w : {"ADA", "AB", "BA", "CAC", "CAD", "DAC", "DAD", "BAB", "ADAB"}) {
    CHECK(sigma_block_check(ctx, w, 4, &k).holds);
  }
  CHECK(sigma_block_check(ctx, "CAD", 4).exceptional);
  CHECK(error_kind([&] { sigma_block_check(ctx, "A", 4, &k); }) == ErrorKind::precondition_violation);
  auto gf3 = grig(3);
  CHECK(error_kind([&] { sigma_block_check(ExprContext(gf3), "AB", 3); }) == ErrorKind::invalid_argument);
}
