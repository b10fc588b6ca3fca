#include "treealg/formulas/formulas.hpp"

#include <map>

#include "treealg/error.hpp"

namespace treealg::formulas {

using exact::BigInt;
using exact::Rational;

namespace {

BigInt p2(std::uint64_t e) { return exact::pow(std::uint64_t{2}, e); }
BigInt p3(std::uint64_t e) { return exact::pow(std::uint64_t{3}, e); }
BigInt p4(std::uint64_t e) { return exact::pow(std::uint64_t{4}, e); }

[[noreturn]] void out_of_range(std::string const& what, std::uint64_t n) {
  throw_invalid(what + " is not known at n = " + std::to_string(n));
}

std::string canonical_group(std::string const& name) {
  static std::map<std::string, std::string> const alias{
      {"grigorchuk", "grigorchuk"},         {"grigorchuk_group", "grigorchuk"},
      {"gupta_sidki", "gupta_sidki"},       {"gupta_sidki_group", "gupta_sidki"},
      {"fabrykowski_gupta_bg", "bg"},       {"fabrykowski_gupta_group", "bg"},
      {"bg", "bg"},                         {"bsv", "bsv"},
      {"bsv_group", "bsv"},                 {"basilica", "basilica"},
      {"basilica_group", "basilica"},       {"odometer", "odometer"},
  };
  auto const it = alias.find(name);
  if (it == alias.end()) {
    throw_not_found("no closed form for group '" + name + "'");
  }
  return it->second;
}

std::uint32_t degree_of(std::string const& g) { return g == "gupta_sidki" || g == "bg" ? 3 : 2; }

// floor(log2 n) for n >= 1
std::uint64_t log2_floor(std::uint64_t n) {
  std::uint64_t k = 0;
  while ((n >> (k + 1)) != 0) {
    ++k;
  }
  return k;
}

}  // namespace

BigInt expected_order_exponent(std::string const& name, std::uint64_t n) {
  auto const g = canonical_group(name);
  if (g == "grigorchuk") {
    if (n < 3) {
      out_of_range("the grigorchuk order", n);
    }
    return 5 * p2(n - 3) + 2;
  }
  if (g == "gupta_sidki") {
    if (n < 2) {
      out_of_range("the gupta_sidki order", n);
    }
    return 2 * p3(n - 1) + 1;
  }
  if (g == "bg") {
    if (n < 2) {
      out_of_range("the fabrykowski_gupta order", n);
    }
    return (p3(n) + 2 * n + 3) / 4;
  }
  if (g == "bsv" || g == "basilica") {
    if (n < 2 || n % 2 != 0) {
      out_of_range("the " + g + " order (even levels only)", n);
    }
    auto const m = n / 2;
    return (g == "bsv" ? 1 : 2) * (p4(m) - 1) / 3 + m;
  }
  return BigInt(static_cast<unsigned long>(n));
}

BigInt expected_group_order(std::string const& name, std::uint64_t n) {
  auto const g = canonical_group(name);
  auto const e = expected_order_exponent(g, n);
  return exact::pow(BigInt(degree_of(g)), e.get_ui());
}

Rational expected_group_hausdorff_term(std::string const& name, std::uint64_t n) {
  auto const   g = canonical_group(name);
  auto const   q = degree_of(g);
  BigInt const vertices = (exact::pow(std::uint64_t{q}, n) - 1) / (q - 1);
  return exact::make_rational(expected_order_exponent(g, n), vertices);
}

BigInt expected_algebra_dim(CharClass c, std::uint64_t n) {
  if (c == CharClass::other) {
    if (n < 1) {
      out_of_range("the odd-characteristic algebra dimension", n);
    }
    return (p4(n) + 2) / 3;
  }
  if (n < 2) {
    out_of_range("the characteristic-2 algebra dimension", n);
  }
  return (14 * p4(n - 2) + 10) / 3;
}

Rational expected_algebra_hausdorff_term(CharClass c, std::uint64_t n) {
  return exact::make_rational(expected_algebra_dim(c, n), (p4(n) + 2) / 3);
}

BigInt expected_a_char2(std::uint64_t n) {
  static constexpr std::uint64_t table[] = {1, 3, 4};
  if (n < 3) {
    return table[n];
  }
  auto const k  = log2_floor(n);
  auto const pk = std::uint64_t{1} << k;
  if (2 * n <= 3 * pk) {
    return BigInt(static_cast<unsigned long>(2 * n - pk / 2));
  }
  return BigInt(static_cast<unsigned long>(n + pk));
}

BigInt expected_a_charne2(std::uint64_t n) {
  static constexpr std::uint64_t table[] = {1, 4, 6, 8, 10, 13, 16};
  if (n < 1) {
    out_of_range("the S-ball coefficient", n);
  }
  if (n <= 6) {
    return table[n];
  }
  auto const k  = log2_floor(n);
  auto const pk = std::uint64_t{1} << k;
  std::uint64_t v = 0;
  if (4 * n <= 5 * pk) {
    v = 4 * n - 3 * pk / 2;
  } else if (2 * n <= 3 * pk) {
    v = 3 * n - pk / 4;
  } else if (4 * n <= 7 * pk) {
    v = n + 11 * pk / 4;
  } else {
    v = 2 * n + pk;
  }
  return BigInt(static_cast<unsigned long>(v));
}

BigInt expected_F_dim_charne2(std::uint64_t n) {
  if (n <= 4 || (n & (n - 1)) != 0) {
    out_of_range("dim F_n (powers of two above 4)", n);
  }
  // (4/3) n^2 + (5/4) n + 2/3 = (16 n^2 + 15 n + 8) / 12
  BigInt const nn = static_cast<unsigned long>(n);
  BigInt const num = 16 * nn * nn + 15 * nn + 8;
  if (num % 12 != 0) {
    throw_invalid("dim F_n is not an integer at n = " + std::to_string(n));
  }
  return num / 12;
}

BranchingQuotients expected_branching_quotients(CharClass c) {
  if (c == CharClass::two) {
    return {6, 12, 8};
  }
  return {6, std::nullopt, 20};
}

Rational expected_hausdorff(std::string const& name) {
  static std::map<std::string, std::pair<int, int>> const algebra{
      {"grigorchuk_alg_char2", {7, 8}},
      {"grigorchuk_alg_charne2", {1, 1}},
  };
  if (auto it = algebra.find(name); it != algebra.end()) {
    return exact::make_rational(it->second.first, it->second.second);
  }
  static std::map<std::string, std::pair<int, int>> const groups{
      {"grigorchuk", {5, 8}}, {"gupta_sidki", {4, 9}}, {"bg", {1, 2}},
      {"bsv", {1, 3}},        {"basilica", {2, 3}},
  };
  std::string g;
  try {
    g = canonical_group(name);
  } catch (Error const&) {
    throw_not_found("no Hausdorff dimension recorded for '" + name + "'");
  }
  auto const it = groups.find(g);
  if (it == groups.end()) {
    throw_not_found("no Hausdorff dimension recorded for '" + name + "'");
  }
  return exact::make_rational(it->second.first, it->second.second);
}

std::vector<std::string> hausdorff_names() {
  return {"grigorchuk_group", "gupta_sidki_group", "fabrykowski_gupta_group", "bsv_group",
          "basilica_group",   "grigorchuk_alg_char2", "grigorchuk_alg_charne2"};
}

}  // namespace treealg::formulas
