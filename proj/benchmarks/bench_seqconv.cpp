#include <benchmark/benchmark.h>

#include "seqconv/analysis.hpp"

using namespace seqconv;

static void BM_ConvSchoolbook(benchmark::State& state) {
  Seq f = fib_seq(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    ConvResult r = conv(f, f);
    benchmark::DoNotOptimize(r.seq.values().data());
  }
}
BENCHMARK(BM_ConvSchoolbook)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

static void BM_ConvKaratsuba(benchmark::State& state) {
  Seq f = fib_seq(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    ConvResult r = conv_fast(f, f);
    benchmark::DoNotOptimize(r.seq.values().data());
  }
}
BENCHMARK(BM_ConvKaratsuba)->Arg(64)->Arg(128)->Arg(256)->Arg(512);

static void BM_VariancePipeline(benchmark::State& state) {
  const auto L = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    Rational v = variance(Pmf::from_seq(family_sequence(FamilyKind::self, L)));
    benchmark::DoNotOptimize(v.num().sign());
  }
}
BENCHMARK(BM_VariancePipeline)->Arg(50)->Arg(100)->Arg(200);

static void BM_BigIntMul(benchmark::State& state) {
  BigInt a = fib_term(static_cast<std::size_t>(state.range(0)));
  BigInt b = a * a;
  for (auto _ : state) {
    BigInt p = a * b;
    benchmark::DoNotOptimize(p.sign());
  }
}
BENCHMARK(BM_BigIntMul)->Arg(100)->Arg(400)->Arg(1600);

static void BM_GoldenRatio(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Decimal d = golden_ratio(digits);
    benchmark::DoNotOptimize(d.text.data());
  }
}
BENCHMARK(BM_GoldenRatio)->Arg(15)->Arg(40)->Arg(100);

BENCHMARK_MAIN();
