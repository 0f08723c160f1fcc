#include <benchmark/benchmark.h>

#include "loopreps/kxmod.hpp"
#include "loopreps/repclass.hpp"
#include "loopreps/series.hpp"
#include "loopreps/smith.hpp"

using namespace loopreps;

namespace {

ContextPtr cyclotomic5() {
  return GaloisContext::build(PolyQ({1, 1, 1, 1, 1}),
                              {PolyQ({0, 1}), PolyQ({0, 0, 1}), PolyQ({0, 0, 0, 1}), PolyQ({-1, -1, -1, -1})},
                              {0, 1, 2, 3});
}

void BM_FieldInverse(benchmark::State& state) {
  auto ctx = cyclotomic5();
  const FieldElem a = ctx->element({Rational(3), Rational(-1, 2), Rational(7), Rational(2, 5)});
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_FieldInverse);

// fresh root system each round so the multiplicity cache stays cold
void BM_FreudenthalG2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rs = RootSystem::build("G2");
    benchmark::DoNotOptimize(rs->weightMults(Weight({n, n})));
  }
}
BENCHMARK(BM_FreudenthalG2)->Arg(1)->Arg(3)->Arg(6);

void BM_TensorDecomposeG(benchmark::State& state) {
  for (auto _ : state) {
    auto rs = RootSystem::build("B3");
    benchmark::DoNotOptimize(rs->tensorDecomposeG(Weight({1, 1, 1}), Weight({2, 0, 1})));
  }
}
BENCHMARK(BM_TensorDecomposeG);

void BM_TensorDecomposeK(benchmark::State& state) {
  auto ctx = cyclotomic5();
  auto rs = RootSystem::build("A2");
  const FieldElem t = FieldElem::generator(ctx->field());
  const LWeight a = LWeight::evaluation(ctx, rs, Weight({1, 1}), t);
  const LWeight b = LWeight::evaluation(ctx, rs, Weight({2, 0}), t * t);
  for (auto _ : state) benchmark::DoNotOptimize(tensorDecomposeK(a, b));
}
BENCHMARK(BM_TensorDecomposeK);

void BM_BuildKXModule(benchmark::State& state) {
  auto ctx = cyclotomic5();
  auto rs = RootSystem::build("A1");
  const FieldElem t = FieldElem::generator(ctx->field());
  const LWeight w = LWeight::fromFactors(ctx, rs, {{0, t, 2}, {0, t * t + FieldElem::one(ctx->field()), 1}});
  for (auto _ : state) benchmark::DoNotOptimize(buildKXModule(w));
}
BENCHMARK(BM_BuildKXModule);

void BM_SeriesRoundTrip(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(roundTripIdentity("a", order));
}
BENCHMARK(BM_SeriesRoundTrip)->Arg(4)->Arg(8);

void BM_SmithE8(benchmark::State& state) {
  auto rs = RootSystem::build("E8");
  const IntMatrix cartan = rs->cartan();
  for (auto _ : state) benchmark::DoNotOptimize(smithNormalForm(cartan));
}
BENCHMARK(BM_SmithE8);

}  // namespace
BENCHMARK_MAIN();
