#include <catch2/catch.hpp>

#include <random>

#include "treealg/error.hpp"
#include "treealg/permgrp/levels.hpp"
#include "treealg/selfsim/zoo.hpp"

using namespace treealg;
using namespace treealg::permgrp;
using selfsim::builtin_group;
using selfsim::builtin_names;

namespace {

exact::BigInt p2(unsigned long e) { return exact::pow(std::uint64_t{2}, e); }
exact::BigInt p3(unsigned long e) { return exact::pow(std::uint64_t{3}, e); }

}  // namespace

TEST_CASE("level permutations agree with the tree action", "[permgrp]") {
  std::mt19937_64 rng(5);
  for (auto const& name : builtin_names()) {
    auto rec = builtin_group(name);
    for (int t = 0; t < 50; ++t) {
      std::vector<selfsim::Symbol> s(rng() % 9);
      for (auto& x : s) {
        x = {static_cast<std::uint32_t>(rng() % rec.rank()), (rng() & 1U) != 0};
      }
      selfsim::GroupWord w(s);
      for (std::size_t n = 0; n <= 4; ++n) {
        auto p = level_permutation(rec, w, n);
        for (std::uint64_t i = 0; i < p.degree(); ++i) {
          auto v = selfsim::vertex_from_index(i, n, rec.q());
          REQUIRE(p[i] == selfsim::vertex_index(selfsim::act(rec, w, v), rec.q()));
        }
      }
    }
  }
}

TEST_CASE("level permutation examples", "[permgrp]") {
  auto g = builtin_group("grigorchuk");
  // 11 <-> 21 and 12 <-> 22, i.e. index 0 <-> 2 and 1 <-> 3
  CHECK(level_permutation(g, g.parse_word("a"), 2).images() ==
        std::vector<std::uint32_t>{2, 3, 0, 1});
  CHECK(level_permutation(g, {}, 3).is_identity());
  auto odo = builtin_group("odometer");
  auto tau = level_permutation(odo, odo.parse_word("tau"), 3);
  REQUIRE(tau.cycles().size() == 1);
  CHECK(tau.cycles()[0].size() == 8);
}

TEST_CASE("grigorchuk orders follow 2^(5*2^(n-3)+2)", "[permgrp]") {
  auto g = builtin_group("grigorchuk");
  CHECK(group_order_at_level(g, 1) == 2);
  CHECK(group_order_at_level(g, 2) == 8);
  for (unsigned long n = 3; n <= 6; ++n) {
    REQUIRE(group_order_at_level(g, n) == p2(5 * (1UL << (n - 3)) + 2));
  }
}

TEST_CASE("gupta-sidki orders", "[permgrp]") {
  auto gs = builtin_group("gupta_sidki");
  CHECK(group_order_at_level(gs, 1) == 3);
  for (unsigned long n = 2; n <= 5; ++n) {
    REQUIRE(group_order_at_level(gs, n) == p3(2 * exact::pow(std::uint64_t{3}, n - 2).get_ui() + 1));
  }
}

TEST_CASE("fabrykowski-gupta orders follow 3^((3^n+2n+3)/4)", "[permgrp]") {
  auto bg = builtin_group("fabrykowski_gupta_bg");
  CHECK(group_order_at_level(bg, 1) == 3);
  for (unsigned long n = 2; n <= 5; ++n) {
    REQUIRE(group_order_at_level(bg, n) == p3((exact::pow(std::uint64_t{3}, n).get_ui() + 2 * n + 3) / 4));
  }
}

TEST_CASE("bsv and basilica orders at even levels", "[permgrp]") {
  auto bsv = builtin_group("bsv");
  auto bas = builtin_group("basilica");
  for (unsigned long n = 1; n <= 4; ++n) {
    auto const four = (1UL << (2 * n)) - 1;
    REQUIRE(group_order_at_level(bsv, 2 * n) == p2(four / 3 + n));
    REQUIRE(group_order_at_level(bas, 2 * n) == p2(2 * four / 3 + n));
  }
  CHECK(group_order_at_level(bsv, 3) == 16);
  CHECK(group_order_at_level(bas, 3) == 64);
}

TEST_CASE("odometer orders and element orders", "[permgrp]") {
  auto odo = builtin_group("odometer");
  for (unsigned long n = 1; n <= 10; ++n) {
    REQUIRE(group_order_at_level(odo, n) == p2(n));
    REQUIRE(element_order_at_level(odo, odo.parse_word("tau"), n) == p2(n));
  }
  auto g = builtin_group("grigorchuk");
  for (std::size_t n = 0; n <= 8; ++n) {
    REQUIRE(4 % element_order_at_level(g, g.parse_word("ad"), n) == 0);
    REQUIRE(element_order_at_level(g, {}, n) == 1);
  }
  CHECK(element_order_at_level(g, g.parse_word("ad"), 8) == 4);
}

TEST_CASE("degree cap", "[permgrp]") {
  auto gs = builtin_group("gupta_sidki");
  CHECK_THROWS_AS(group_order_at_level(gs, 9), Error);
  try {
    group_order_at_level(gs, 9);
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::resource_limit);
  }
  CHECK_THROWS_AS(group_order_at_level(gs, 0), Error);
}

TEST_CASE("level transitivity", "[permgrp]") {
  auto g  = builtin_group("grigorchuk");
  auto ll = builtin_group("lamplighter");
  for (std::size_t n = 1; n <= 8; ++n) {
    REQUIRE(is_level_transitive(g, n));
    REQUIRE(is_level_transitive(ll, n));
  }
  std::vector<selfsim::Generator> gens(1);
  gens[0].name     = "e";
  gens[0].perm     = {0, 1};
  gens[0].sections = {selfsim::GroupWord({{0, false}}), selfsim::GroupWord({{0, false}})};
  selfsim::WreathRecursion trivial(2, gens);
  CHECK_FALSE(is_level_transitive(trivial, 1));
}

TEST_CASE("schreier-sims agrees with exhaustive closure", "[permgrp][property]") {
  for (auto const& name : builtin_names()) {
    auto       rec = builtin_group(name);
    LevelTower tower(rec);
    for (std::size_t n = 1; degree_at_level(rec.q(), n) <= 64; ++n) {
      auto const& gens  = tower.generators(n);
      auto const  deg   = degree_at_level(rec.q(), n);
      auto const  exh   = exhaustive_order(gens, deg, 300000);
      PermGroup   group(gens, deg);
      if (exh) {
        REQUIRE(group.order() == *exh);
      }
      for (auto const& g : gens) {
        REQUIRE(group.contains(g));
      }
    }
  }
}

TEST_CASE("orders are divisible along the tower", "[permgrp][property]") {
  for (auto const& name : builtin_names()) {
    auto          rec  = builtin_group(name);
    exact::BigInt prev = 1;
    for (std::size_t n = 1; degree_at_level(rec.q(), n) <= 729; ++n) {
      auto const o = group_order_at_level(rec, n);
      REQUIRE(o % prev == 0);
      prev = o;
    }
  }
}

TEST_CASE("grigorchuk relative hausdorff sequence", "[permgrp]") {
  auto g   = builtin_group("grigorchuk");
  auto seq = group_hausdorff_sequence(g, 2, 8);
  REQUIRE(seq.size() == 8);
  for (unsigned long n = 3; n <= 8; ++n) {
    REQUIRE(seq[n - 1] == exact::make_rational(5 * (1UL << (n - 3)) + 2, (1UL << n) - 1));
  }
  CHECK(exact::to_string(seq[4]) == "22/31");
  CHECK(exact::to_string(seq[7]) == "54/85");
  CHECK(group_order_at_level(g, 8) == exact::BigInt(1) << 162);
  auto odo = builtin_group("odometer");
  auto os  = group_hausdorff_sequence(odo, 2, 6);
  for (unsigned long n = 1; n <= 6; ++n) {
    REQUIRE(os[n - 1] == exact::make_rational(n, (1UL << n) - 1));
  }
  CHECK_THROWS_AS(group_hausdorff_sequence(g, 3, 2), Error);
}
