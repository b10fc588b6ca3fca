#include "treealg/algrep/closure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <iomanip>
#include <regex>
#include <sstream>

#include "treealg/error.hpp"

namespace treealg::algrep {

using exact::BigInt;
using exact::FieldSpec;
using exact::Rational;
using exact::Scalar;
using permgrp::Permutation;

namespace {

constexpr std::size_t worklist_chunk = 256;

LevelMatrix apply(PermCombination const& c, LevelMatrix const& m, Side side) {
  if (c.size() == 1 && c.front().first.is_one()) {
    auto const& g = c.front().second;
    return side == Side::left ? m.left_permuted(g) : m.right_permuted(g);
  }
  return side == Side::left ? left_multiply(c, m) : right_multiply(m, c);
}

// Breadth-first closure of a span under the given multipliers.
void close_under(SpanBasis& span, std::vector<LevelMatrix> const& seeds,
                 std::vector<PermCombination> const& mults, Side side) {
  auto                    first = span.insert(seeds);
  std::deque<LevelMatrix> queue(std::make_move_iterator(first.begin()),
                                std::make_move_iterator(first.end()));
  while (!queue.empty()) {
    std::vector<LevelMatrix> cands;
    for (std::size_t i = 0; i < worklist_chunk && !queue.empty(); ++i) {
      LevelMatrix const w = std::move(queue.front());
      queue.pop_front();
      for (auto const& c : mults) {
        if (side != Side::right) {
          cands.push_back(apply(c, w, Side::left));
        }
        if (side != Side::left) {
          cands.push_back(apply(c, w, Side::right));
        }
      }
    }
    for (auto& a : span.insert(cands)) {
      queue.push_back(std::move(a));
    }
  }
}

std::vector<PermCombination> generator_combinations(Algebra const& alg, std::size_t n) {
  std::vector<PermCombination> out;
  for (auto& p : alg.generator_permutations(n)) {
    out.push_back({{Scalar::one(alg.field()), std::move(p)}});
  }
  return out;
}

std::vector<PermCombination> combinations(Algebra const& alg, std::vector<AlgebraElement> const& xs,
                                          std::size_t n) {
  std::vector<PermCombination> out;
  for (auto const& x : xs) {
    out.push_back(alg.combination(x, n));
  }
  return out;
}

// A full basis at level n can hold up to N^2 rows of N^2 entries, N = q^n.
double worst_case_mib(FieldSpec field, std::uint32_t q, std::size_t n) {
  double const entries = std::pow(static_cast<double>(q), 4.0 * static_cast<double>(n));
  double const bytes   = field.is_gf2() ? 0.125 : field.is_rational() ? 32.0 : 1.0;
  return entries * bytes / (1024.0 * 1024.0);
}

void check_cap(Algebra const& alg, std::size_t n, std::size_t cap, char const* what) {
  if (n > cap) {
    std::ostringstream msg;
    msg << what << " at level " << n << " exceeds the level cap " << cap << " (worst case about "
        << std::fixed << std::setprecision(0) << worst_case_mib(alg.field(), alg.q(), n) << " MiB)";
    throw_resource(msg.str());
  }
}

}  // namespace

std::size_t default_level_cap(FieldSpec field) { return field.is_gf2() ? 7 : 5; }

void close_under_generators(Algebra const& alg, SpanBasis& span, std::vector<LevelMatrix> const& seeds,
                            Side side) {
  close_under(span, seeds, generator_combinations(alg, span.level()), side);
}

SpanBasis algebra_span(Algebra const& alg, std::size_t n, Exec exec) {
  SpanBasis span(alg.field(), alg.q(), n, exec);
  close_under_generators(alg, span, {LevelMatrix::identity(alg.field(), alg.q(), n)}, Side::right);
  return span;
}

std::size_t algebra_dimension(Algebra const& alg, std::size_t n, std::size_t level_cap, Exec exec) {
  check_cap(alg, n, level_cap, "algebra span");
  return algebra_span(alg, n, exec).dim();
}

std::size_t algebra_dimension(Algebra const& alg, std::size_t n, Exec exec) {
  return algebra_dimension(alg, n, default_level_cap(alg.field()), exec);
}

BigInt closure_dimension(std::uint32_t q, std::size_t dim_p, std::size_t n) {
  BigInt const q2 = BigInt(q) * q;
  return 1 + BigInt(static_cast<unsigned long>(dim_p - 1)) * (exact::pow(q2, n) - 1) / (q2 - 1);
}

std::vector<Rational> algebra_hausdorff_sequence(Algebra const& alg, std::size_t n_max,
                                                 HausdorffNorm norm, Exec exec) {
  auto const dim_p = algebra_dimension(alg, 1, exec);
  if (dim_p <= 1) {
    throw_invalid("the level-1 image is one-dimensional, so the relative dimension is undefined");
  }
  BigInt const          q2 = BigInt(alg.q()) * alg.q();
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt const d = static_cast<unsigned long>(algebra_dimension(alg, n, exec));
    if (norm == HausdorffNorm::matrix) {
      out.push_back(exact::make_rational(d * (q2 - 1), exact::pow(q2, n) * (dim_p - 1)));
    } else {
      out.push_back(exact::make_rational(d, closure_dimension(alg.q(), dim_p, n)));
    }
  }
  return out;
}

std::vector<std::size_t> filtration_at_level(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                             std::size_t d_max, std::size_t n, FiltrationMode mode,
                                             Exec exec) {
  if (gens.empty()) {
    throw_invalid("filtration needs at least one generator");
  }
  auto const mults = combinations(alg, gens, n);
  auto const one   = LevelMatrix::identity(alg.field(), alg.q(), n);
  if (mode == FiltrationMode::ball) {
    SpanBasis                span(alg.field(), alg.q(), n, exec);
    std::vector<LevelMatrix> fresh = span.insert(std::vector<LevelMatrix>{one});
    std::vector<std::size_t> a{fresh.size()};
    for (std::size_t d = 1; d <= d_max; ++d) {
      std::vector<LevelMatrix> cands;
      for (auto const& v : fresh) {
        for (auto const& m : mults) {
          cands.push_back(apply(m, v, Side::left));
        }
      }
      fresh = span.insert(cands);
      a.push_back(fresh.size());
    }
    return a;
  }
  if (alg.field().characteristic() != alg.q()) {
    throw_invalid("augmentation powers are only filtered in characteristic q; in other "
                  "characteristics they are idempotent, use the ball filtration");
  }
  std::vector<std::size_t> dims;
  std::vector<LevelMatrix> exact_d{one};
  for (std::size_t d = 0; d <= d_max + 1; ++d) {
    if (d > 0) {
      SpanBasis                e(alg.field(), alg.q(), n, exec);
      std::vector<LevelMatrix> cands;
      for (auto const& v : exact_d) {
        for (auto const& m : mults) {
          cands.push_back(apply(m, v, Side::left));
        }
      }
      e.insert(cands);
      exact_d = e.rows();
    }
    SpanBasis w(alg.field(), alg.q(), n, exec);
    close_under(w, exact_d, mults, Side::left);
    dims.push_back(w.dim());
  }
  std::vector<std::size_t> a;
  for (std::size_t d = 0; d <= d_max; ++d) {
    a.push_back(dims[d] - dims[d + 1]);
  }
  return a;
}

FiltrationReport filtration_dims(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                 std::size_t d_max, FiltrationOptions const& options) {
  if (options.start_level > options.level_cap) {
    throw_invalid("start level exceeds the level cap");
  }
  FiltrationReport report;
  report.start_level = options.start_level;
  for (std::size_t m = options.start_level; m <= options.level_cap; ++m) {
    report.per_level.push_back(filtration_at_level(alg, gens, d_max, m, options.mode, options.exec));
    report.a     = report.per_level.back();
    report.level = m;
    auto const k = report.per_level.size();
    if (k >= 2 && report.per_level[k - 1] == report.per_level[k - 2]) {
      report.stable = true;
      break;
    }
  }
  return report;
}

SpanBasis ideal_closure(Algebra const& alg, std::vector<AlgebraElement> const& gens, std::size_t n,
                        Exec exec) {
  SpanBasis                span(alg.field(), alg.q(), n, exec);
  std::vector<LevelMatrix> seeds;
  for (auto const& g : gens) {
    seeds.push_back(alg.evaluate(g, n));
  }
  close_under_generators(alg, span, seeds, Side::both);
  return span;
}

namespace {

IdealQuotientLevel quotient_level(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                  std::size_t n, SpanBasis const& k, SpanBasis const& k_prev, Exec exec) {
  IdealQuotientLevel out{};
  out.level       = n;
  out.algebra_dim = algebra_dimension(alg, n, n, exec);
  out.ideal_dim   = k.dim();

  auto const               mults = combinations(alg, gens, n);
  std::vector<LevelMatrix> seeds;
  for (auto const& row : k.rows()) {
    for (auto const& m : mults) {
      seeds.push_back(apply(m, row, Side::right));
    }
  }
  SpanBasis square(alg.field(), alg.q(), n, exec);
  close_under_generators(alg, square, seeds, Side::right);
  out.square_dim = square.dim();

  out.block_dim    = alg.q() * alg.q() * k_prev.dim();
  out.block_inside = true;
  for (auto const& kappa : k_prev.rows()) {
    for (std::uint32_t u = 0; u < alg.q() && out.block_inside; ++u) {
      for (std::uint32_t v = 0; v < alg.q() && out.block_inside; ++v) {
        out.block_inside = k.contains(LevelMatrix::unit_block(u, v, kappa));
      }
    }
  }
  return out;
}

}  // namespace

IdealQuotientLevel ideal_quotient_at_level(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                           std::size_t n, Exec exec) {
  if (n < 1) {
    throw_invalid("ideal quotients need level at least 1");
  }
  auto const k      = ideal_closure(alg, gens, n, exec);
  auto const k_prev = ideal_closure(alg, gens, n - 1, exec);
  return quotient_level(alg, gens, n, k, k_prev, exec);
}

IdealQuotientReport ideal_quotient_dims(Algebra const& alg, std::vector<AlgebraElement> const& gens,
                                        std::size_t start_level, std::size_t level_cap, Exec exec) {
  if (level_cap == 0) {
    level_cap = default_level_cap(alg.field());
  }
  if (start_level < 1 || start_level > level_cap) {
    throw_invalid("start level must lie in [1, level cap]");
  }
  IdealQuotientReport report;
  SpanBasis           prev = ideal_closure(alg, gens, start_level - 1, exec);
  for (std::size_t m = start_level; m <= level_cap; ++m) {
    SpanBasis cur = ideal_closure(alg, gens, m, exec);
    report.per_level.push_back(quotient_level(alg, gens, m, cur, prev, exec));
    auto const& r       = report.per_level.back();
    report.codim        = r.algebra_dim - r.ideal_dim;
    report.k_over_k2    = r.ideal_dim - r.square_dim;
    report.k_over_mxk   = r.ideal_dim - std::min(r.ideal_dim, r.block_dim);
    report.block_inside = r.block_inside;
    report.level        = m;
    prev                = std::move(cur);
    auto const k        = report.per_level.size();
    if (k >= 2) {
      auto const& a   = report.per_level[k - 2];
      auto const  key = [](IdealQuotientLevel const& x) {
        return std::array<std::size_t, 3>{x.algebra_dim - x.ideal_dim, x.ideal_dim - x.square_dim,
                                           x.ideal_dim - std::min(x.ideal_dim, x.block_dim)};
      };
      if (key(a) == key(r)) {
        report.stable = true;
        break;
      }
    }
  }
  return report;
}

SubspaceSpec SubspaceSpec::parse(std::string const& text) {
  static std::regex const varpi(R"((?:varpi|w|ϖ)\^?(\d+))");
  static std::regex const ideal(R"(K(?:\^(\d+))?)");
  static std::regex const block(R"(M_?\{?X(?:\^(\d+))?\}?\(?K\)?)");
  std::smatch             m;
  if (std::regex_match(text, m, varpi)) {
    return {Kind::varpi, std::stoul(m[1].str())};
  }
  if (std::regex_match(text, m, ideal)) {
    return {Kind::ideal_power, m[1].matched ? std::stoul(m[1].str()) : 1};
  }
  if (std::regex_match(text, m, block)) {
    return {Kind::block, m[1].matched ? std::stoul(m[1].str()) : 1};
  }
  throw_invalid("unknown subspace '" + text + "' (expected varpi^d, K^d or M_{X^k}(K))");
}

std::string SubspaceSpec::to_string() const {
  switch (kind) {
    case Kind::varpi:
      return "varpi^" + std::to_string(exponent);
    case Kind::ideal_power:
      return "K^" + std::to_string(exponent);
    case Kind::block:
      return exponent == 1 ? "M_X(K)" : "M_{X^" + std::to_string(exponent) + "}(K)";
  }
  return {};
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::subset:
      return "subset";
    case Relation::equal:
      return "equal";
    case Relation::neither:
      return "neither";
  }
  return {};
}

namespace {

// Span of all products of exactly d letters.
std::vector<LevelMatrix> exact_products(BranchSetup const& setup, std::size_t d, std::size_t n, Exec exec) {
  auto const&              alg   = setup.alg;
  auto const               mults = combinations(alg, setup.letters, n);
  std::vector<LevelMatrix> cur{LevelMatrix::identity(alg.field(), alg.q(), n)};
  for (std::size_t i = 0; i < d; ++i) {
    SpanBasis                e(alg.field(), alg.q(), n, exec);
    std::vector<LevelMatrix> cands;
    for (auto const& v : cur) {
      for (auto const& m : mults) {
        cands.push_back(apply(m, v, Side::left));
      }
    }
    e.insert(cands);
    cur = e.rows();
  }
  return cur;
}

LevelMatrix embed(LevelMatrix const& kappa, std::uint64_t u, std::uint64_t v, std::size_t k,
                  std::uint32_t q) {
  LevelMatrix out = kappa;
  for (std::size_t i = 0; i < k; ++i) {
    out = LevelMatrix::unit_block(static_cast<std::uint32_t>(u % q), static_cast<std::uint32_t>(v % q), out);
    u /= q;
    v /= q;
  }
  return out;
}

}  // namespace

std::vector<LevelMatrix> subspace_generators(BranchSetup const& setup, SubspaceSpec const& spec,
                                             std::size_t n, Exec exec) {
  auto const& alg = setup.alg;
  switch (spec.kind) {
    case SubspaceSpec::Kind::varpi:
      return exact_products(setup, spec.exponent, n, exec);
    case SubspaceSpec::Kind::ideal_power: {
      if (spec.exponent == 0) {
        return {LevelMatrix::identity(alg.field(), alg.q(), n)};
      }
      if (spec.exponent == 1) {
        std::vector<LevelMatrix> out;
        for (auto const& g : setup.ideal) {
          out.push_back(alg.evaluate(g, n));
        }
        return out;
      }
      auto const               lower = subspace_basis(setup, {spec.kind, spec.exponent - 1}, n, exec);
      auto const               mults = combinations(alg, setup.ideal, n);
      std::vector<LevelMatrix> out;
      for (auto const& row : lower.rows()) {
        for (auto const& m : mults) {
          out.push_back(apply(m, row, Side::right));
        }
      }
      return out;
    }
    case SubspaceSpec::Kind::block: {
      if (spec.exponent > n) {
        throw_invalid("M_{X^k}(K) needs k <= level");
      }
      auto const    k_low = ideal_closure(alg, setup.ideal, n - spec.exponent, exec);
      std::uint64_t cells = 1;
      for (std::size_t i = 0; i < spec.exponent; ++i) {
        cells *= alg.q();
      }
      std::vector<LevelMatrix> out;
      for (auto const& kappa : k_low.rows()) {
        for (std::uint64_t u = 0; u < cells; ++u) {
          for (std::uint64_t v = 0; v < cells; ++v) {
            out.push_back(embed(kappa, u, v, spec.exponent, alg.q()));
          }
        }
      }
      return out;
    }
  }
  return {};
}

SpanBasis subspace_basis(BranchSetup const& setup, SubspaceSpec const& spec, std::size_t n, Exec exec) {
  auto const& alg = setup.alg;
  SpanBasis   span(alg.field(), alg.q(), n, exec);
  switch (spec.kind) {
    case SubspaceSpec::Kind::varpi:
      close_under_generators(alg, span, exact_products(setup, spec.exponent, n, exec), Side::left);
      break;
    case SubspaceSpec::Kind::ideal_power:
      if (spec.exponent <= 1) {
        close_under_generators(alg, span, subspace_generators(setup, spec, n, exec), Side::both);
      } else {
        close_under_generators(alg, span, subspace_generators(setup, spec, n, exec), Side::right);
      }
      break;
    case SubspaceSpec::Kind::block:
      span.insert(subspace_generators(setup, spec, n, exec));
      break;
  }
  return span;
}

Relation subspace_relation(BranchSetup const& setup, SubspaceSpec const& lhs, SubspaceSpec const& rhs,
                           std::size_t n, Exec exec) {
  auto const inside = [&](SubspaceSpec const& a, SubspaceSpec const& b) {
    auto const basis = subspace_basis(setup, b, n, exec);
    for (auto const& g : subspace_generators(setup, a, n, exec)) {
      if (!basis.contains(g)) {
        return false;
      }
    }
    return true;
  };
  if (!inside(lhs, rhs)) {
    return Relation::neither;
  }
  return inside(rhs, lhs) ? Relation::equal : Relation::subset;
}

LevelMatrix truncate(LevelMatrix const& m) {
  if (m.level() == 0) {
    throw_invalid("cannot truncate below level 0");
  }
  LevelMatrix       out(m.field(), m.q(), m.level() - 1);
  std::size_t const n = out.size();
  std::uint32_t const q = m.q();
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      auto s = Scalar::zero(m.field());
      for (std::uint32_t y = 0; y < q; ++y) {
        s += m.at(v * q, w * q + y);
      }
      if (!s.is_zero()) {
        out.set(v, w, s);
      }
    }
  }
  return out;
}

}  // namespace treealg::algrep
