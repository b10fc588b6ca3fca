#include <catch2/catch.hpp>

#include <cmath>
#include <random>

#include "treealg/error.hpp"
#include "treealg/exact/field.hpp"
#include "treealg/exact/series.hpp"

using namespace treealg;
using namespace treealg::exact;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) {
    out.emplace_back(x);
  }
  return out;
}

Scalar random_scalar(FieldSpec f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-50, 50);
  if (f.is_rational()) {
    long den = d(rng);
    if (den == 0) {
      den = 1;
    }
    return Scalar(f, make_rational(d(rng), den));
  }
  return Scalar(f, static_cast<std::int64_t>(d(rng)));
}

// Direct expansion of (1 + t + ... + t^{p-1})^l by repeated multiplication.
std::vector<BigInt> direct_power(std::uint32_t p, std::uint64_t l, std::size_t trunc) {
  std::vector<BigInt> acc(trunc + 1, 0);
  acc[0] = 1;
  for (std::uint64_t r = 0; r < l; ++r) {
    std::vector<BigInt> next(trunc + 1, 0);
    for (std::size_t i = 0; i <= trunc; ++i) {
      for (std::size_t k = 0; k < p && i + k <= trunc; ++k) {
        next[i + k] += acc[i];
      }
    }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST_CASE("field parsing and names", "[exact]") {
  CHECK(FieldSpec::parse("gf2").characteristic() == 2);
  CHECK(FieldSpec::parse("GF(3)").characteristic() == 3);
  CHECK(FieldSpec::parse("Q").is_rational());
  CHECK(FieldSpec::parse("5").name() == "GF(5)");
  CHECK_THROWS_AS(FieldSpec::parse("gf4"), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
}

TEST_CASE("scalar canonical forms", "[exact]") {
  auto const q = FieldSpec::rationals();
  CHECK(Scalar(q, make_rational(2, -4)).to_string() == "-1/2");
  CHECK(Scalar(q, make_rational(6, 3)).to_string() == "2");
  auto const f3 = FieldSpec::prime(3);
  CHECK(Scalar(f3, std::int64_t{-1}).residue() == 2);
  CHECK(Scalar(f3, make_rational(1, 2)).residue() == 2);
  CHECK_THROWS_AS(Scalar(f3, make_rational(1, 3)), Error);
  CHECK_THROWS_AS(Scalar::zero(f3).inverse(), Error);
}

TEST_CASE("field axioms on random triples", "[exact][property]") {
  std::mt19937_64 rng(20240611);
  for (auto f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                 FieldSpec::prime(7), FieldSpec::rationals()}) {
    auto const zero = Scalar::zero(f);
    auto const one  = Scalar::one(f);
    for (int t = 0; t < 10000; ++t) {
      auto a = random_scalar(f, rng);
      auto b = random_scalar(f, rng);
      auto c = random_scalar(f, rng);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a + (-a) == zero);
      REQUIRE(a * one == a);
      if (!a.is_zero()) {
        REQUIRE(a * a.inverse() == one);
      }
    }
  }
}

TEST_CASE("bigint helpers", "[exact]") {
  CHECK(pow(std::uint64_t{2}, 4096) > 0);
  CHECK(exact_log(pow(std::uint64_t{3}, 40), 3) == std::optional<std::uint64_t>(40));
  CHECK_FALSE(exact_log(BigInt(12), 2).has_value());
  CHECK(exact_log(BigInt(1), 2) == std::optional<std::uint64_t>(0));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(6561));
}

TEST_CASE("jennings series small cases", "[exact]") {
  CHECK(jennings_series({1}, 2, 3).coefficients() == ints({1, 1, 0, 0}));
  CHECK(jennings_series({1}, 3, 4).coefficients() == ints({1, 1, 1, 0, 0}));
  CHECK(jennings_series({1, 1}, 2, 4).coefficients() == ints({1, 1, 1, 1, 0}));
  CHECK(jennings_series({}, 2, 2).coefficients() == ints({1, 0, 0}));
  CHECK_THROWS_AS(jennings_series({1}, 4, 3), Error);
}

TEST_CASE("jennings single factor matches direct expansion", "[exact][property]") {
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (std::uint64_t l = 0; l <= 3; ++l) {
      for (std::size_t trunc = 0; trunc <= 30; ++trunc) {
        REQUIRE(jennings_series({l}, p, trunc).coefficients() == direct_power(p, l, trunc));
      }
    }
  }
}

TEST_CASE("truncated series products commute and associate", "[exact][property]") {
  std::mt19937_64                    rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  auto rnd = [&](std::size_t trunc) {
    std::vector<BigInt> c(trunc + 1);
    for (auto& x : c) {
      x = d(rng);
    }
    return TruncSeries(c);
  };
  for (int t = 0; t < 200; ++t) {
    std::size_t trunc = static_cast<std::size_t>(t % 17);
    auto        a = rnd(trunc), b = rnd(trunc), c = rnd(trunc);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
  }
  CHECK_THROWS_AS(TruncSeries(3) * TruncSeries(4), Error);
}

TEST_CASE("growth exponent estimate", "[exact]") {
  std::vector<BigInt> ones(101, 1);
  auto const          e1 = series_dims_to_gk(ones);
  CHECK(e1.value == Approx(std::log(101.0) / std::log(100.0)));
  CHECK(e1.decimal == "1.002161");

  std::vector<BigInt> lin;
  for (long k = 0; k <= 100; ++k) {
    lin.emplace_back(k);
  }
  // sum = 5050 exactly; log(5050)/log(100)
  CHECK(series_dims_to_gk(lin).value == Approx(std::log(5050.0) / std::log(100.0)));
  CHECK(series_dims_to_gk(lin).decimal == "1.851646");

  CHECK_THROWS_AS(series_dims_to_gk(ints({1, 2})), Error);
  CHECK_THROWS_AS(series_dims_to_gk(ints({1, -2, 3})), Error);
}
