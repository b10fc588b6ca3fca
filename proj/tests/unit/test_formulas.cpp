#include <catch2/catch.hpp>

#include "treealg/error.hpp"
#include "treealg/formulas/formulas.hpp"

using namespace treealg;
using namespace treealg::formulas;
using exact::BigInt;
using exact::make_rational;

namespace {

bool rejects(ErrorKind kind, auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.kind() == kind;
  }
  return false;
}

BigInt big(unsigned long v) { return BigInt(v); }

}  // namespace

TEST_CASE("group orders", "[formulas]") {
  CHECK(expected_group_order("grigorchuk", 4) == 4096);
  CHECK(expected_group_order("grigorchuk", 3) == 128);
  CHECK(expected_group_order("grigorchuk", 6) == exact::pow(std::uint64_t{2}, 42));
  CHECK(expected_group_order("gupta_sidki", 2) == 2187);
  CHECK(expected_group_order("fabrykowski_gupta_bg", 2) == 81);
  CHECK(expected_group_order("bsv", 2) == 4);
  CHECK(expected_group_order("basilica", 4) == exact::pow(std::uint64_t{2}, 12));
  CHECK(expected_group_order("odometer", 10) == 1024);
  CHECK(rejects(ErrorKind::invalid_argument, [] { expected_group_order("grigorchuk", 2); }));
  CHECK(rejects(ErrorKind::invalid_argument, [] { expected_group_order("bsv", 3); }));
  CHECK(rejects(ErrorKind::not_found, [] { expected_group_order("lamplighter", 3); }));
}

TEST_CASE("group relative dimensions", "[formulas]") {
  CHECK(expected_group_hausdorff_term("grigorchuk", 5) == make_rational(22, 31));
  CHECK(expected_group_hausdorff_term("grigorchuk", 8) == make_rational(162, 255));
  for (std::uint64_t n = 3; n <= 8; ++n) {
    CHECK(expected_group_hausdorff_term("grigorchuk", n) ==
          make_rational(5 * exact::pow(std::uint64_t{2}, n - 3) + 2, exact::pow(std::uint64_t{2}, n) - 1));
  }
  CHECK(expected_hausdorff("grigorchuk_group") == make_rational(5, 8));
  CHECK(expected_hausdorff("grigorchuk_alg_char2") == make_rational(7, 8));
  CHECK(expected_hausdorff("basilica_group") == make_rational(2, 3));
  CHECK(expected_hausdorff("gupta_sidki") == make_rational(4, 9));
  CHECK(rejects(ErrorKind::not_found, [] { expected_hausdorff("nothing"); }));
}

TEST_CASE("algebra dimensions", "[formulas]") {
  CHECK(expected_algebra_dim(CharClass::other, 2) == 6);
  CHECK(expected_algebra_dim(CharClass::other, 5) == 342);
  CHECK(expected_algebra_dim(CharClass::two, 2) == 8);
  CHECK(expected_algebra_dim(CharClass::two, 5) == 302);
  CHECK(expected_algebra_dim(CharClass::two, 6) == 1198);
  for (std::uint64_t n = 2; n <= 12; ++n) {
    CHECK(expected_algebra_dim(CharClass::two, n + 1) == 14 + 4 * (expected_algebra_dim(CharClass::two, n) - 6));
  }
  CHECK(expected_algebra_hausdorff_term(CharClass::other, 4) == 1);
  CHECK(expected_algebra_hausdorff_term(CharClass::two, 4) == make_rational(3 * 78, 258));
  CHECK(rejects(ErrorKind::invalid_argument, [] { expected_algebra_dim(CharClass::two, 1); }));
}

TEST_CASE("char 2 filtration coefficients", "[formulas]") {
  CHECK(expected_a_char2(0) == 1);
  CHECK(expected_a_char2(5) == 8);
  CHECK(expected_a_char2(12) == 20);
  std::vector<unsigned long> const head{1, 3, 4, 5, 6, 8};
  for (std::uint64_t n = 0; n < head.size(); ++n) {
    CHECK(expected_a_char2(n) == big(head[n]));
  }
  for (std::uint64_t n = 3; n <= 512; ++n) {
    CHECK(expected_a_char2(2 * n) == 2 * expected_a_char2(n));
    CHECK(expected_a_char2(2 * n + 1) == expected_a_char2(n) + expected_a_char2(n + 1));
  }
}

TEST_CASE("odd characteristic ball coefficients", "[formulas]") {
  std::vector<unsigned long> const head{4, 6, 8, 10, 13, 16, 18, 20};
  for (std::uint64_t n = 1; n <= head.size(); ++n) {
    CHECK(expected_a_charne2(n) == big(head[n - 1]));
  }
  auto const a = [](std::uint64_t n) { return expected_a_charne2(n); };
  // a_6 = 16 comes from the table and sits one below the first branch, so
  // the four-term recurrences start at n = 4; at n = 3 only the odd pair holds.
  CHECK(a(12) == 34);
  CHECK(a(14) == 2 * a(7));
  CHECK(a(15) == a(7) + a(8));
  for (std::uint64_t n = 4; n <= 128; ++n) {
    CHECK(a(4 * n) == 2 * a(2 * n));
    CHECK(a(4 * n + 1) == a(2 * n) + a(2 * n + 1));
    CHECK(a(4 * n + 2) == 2 * a(2 * n + 1));
    CHECK(a(4 * n + 3) == a(2 * n + 1) + a(2 * n + 2));
  }
  CHECK(rejects(ErrorKind::invalid_argument, [] { expected_a_charne2(0); }));
}

TEST_CASE("piecewise branches meet at the breakpoints", "[formulas]") {
  for (std::uint64_t k = 3; k <= 12; ++k) {
    BigInt const p = exact::pow(std::uint64_t{2}, k);
    auto const   pk = std::uint64_t{1} << k;
    // char 2 at n = (3/2) 2^k
    auto const m = 3 * pk / 2;
    CHECK(2 * BigInt(static_cast<unsigned long>(m)) - p / 2 == BigInt(static_cast<unsigned long>(m)) + p);
    CHECK(expected_a_char2(m) == BigInt(static_cast<unsigned long>(m)) + p);
    // odd characteristic at (5/4), (3/2), (7/4) 2^k and 2^(k+1)
    for (auto const [num, lo, hi] : {std::tuple{5U, 0, 1}, {6U, 1, 2}, {7U, 2, 3}, {8U, 3, 4}}) {
      auto const n    = num * pk / 4;
      BigInt const nn = static_cast<unsigned long>(n);
      auto const br   = [&](int i) -> BigInt {
        switch (i) {
          case 0:
            return 4 * nn - 3 * p / 2;
          case 1:
            return 3 * nn - p / 4;
          case 2:
            return nn + 11 * p / 4;
          case 3:
            return 2 * nn + p;
          default:
            return 4 * nn - 3 * (2 * p) / 2;
        }
      };
      CHECK(br(lo) == br(hi));
      CHECK(expected_a_charne2(n) == br(lo));
    }
  }
}

TEST_CASE("ball dimension at powers of two", "[formulas]") {
  CHECK(expected_F_dim_charne2(8) == 96);
  CHECK(expected_F_dim_charne2(16) == 362);
  for (std::uint64_t n = 8; n <= 1024; n *= 2) {
    BigInt sum = 1;
    for (std::uint64_t i = 1; i <= n; ++i) {
      sum += expected_a_charne2(i);
    }
    CHECK(sum == expected_F_dim_charne2(n));
  }
  CHECK(rejects(ErrorKind::invalid_argument, [] { expected_F_dim_charne2(6); }));
  CHECK(rejects(ErrorKind::invalid_argument, [] { expected_F_dim_charne2(4); }));
}
