#include <benchmark/benchmark.h>

#include "treealg/algrep/closure.hpp"
#include "treealg/algrep/expr.hpp"
#include "treealg/algrep/nil.hpp"
#include "treealg/present/presentation.hpp"
#include "treealg/selfsim/zoo.hpp"

using namespace treealg;
using algrep::Algebra;
using linalg::Exec;

namespace {

Algebra const& gf2() {
  static Algebra const alg(selfsim::builtin_group("grigorchuk"), exact::FieldSpec::prime(2));
  return alg;
}

Algebra const& gf3() {
  static Algebra const alg(selfsim::builtin_group("grigorchuk"), exact::FieldSpec::prime(3));
  return alg;
}

Exec exec_of(benchmark::State const& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

void matmul(benchmark::State& state, Algebra const& alg, std::size_t level) {
  algrep::ExprContext ctx(alg);
  auto const          x = ctx.evaluate(ctx.parse("1+A+B+AD"), level);
  auto const          y = ctx.evaluate(ctx.parse("(1+B)(1+AC)"), level);
  for (auto _ : state) {
    benchmark::DoNotOptimize(x.multiply(y, exec_of(state)));
  }
}

void BM_Gf2Multiply(benchmark::State& s) { matmul(s, gf2(), 10); }
void BM_Gf3Multiply(benchmark::State& s) { matmul(s, gf3(), 7); }

void BM_AlgebraSpan(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(algrep::algebra_dimension(gf2(), 6, exec_of(state)));
  }
}

void BM_BranchingIdeal(benchmark::State& state) {
  algrep::ExprContext ctx(gf2());
  for (auto _ : state) {
    benchmark::DoNotOptimize(present::branching_ideal(ctx, 6, exec_of(state)).dim());
  }
}

void BM_MonomialSurvey(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(algrep::monomial_nil_survey(gf2(), 9, 8, 8, exec_of(state)).nil);
  }
}

void BM_RelatorCheck(benchmark::State& state) {
  algrep::ExprContext ctx(gf2());
  auto const          rels = present::generate_relators("grigorchuk_alg_char2", 5).relators;
  for (auto _ : state) {
    benchmark::DoNotOptimize(present::check_algebra_relators(ctx, rels, 9, exec_of(state)).checked);
  }
}

}  // namespace

// Argument 0 runs the serial reference kernel, 1 the OpenMP one.
BENCHMARK(BM_Gf2Multiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Gf3Multiply)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AlgebraSpan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BranchingIdeal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonomialSurvey)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelatorCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
