// Serial reference against OpenMP kernels: series convolution, identity
// sweeps and partition count tables.

#include <benchmark/benchmark.h>

#include "rrcf/identities.hpp"
#include "rrcf/kernels.hpp"
#include "rrcf/partitions.hpp"
#include "rrcf/qseries.hpp"

namespace {

using namespace rrcf;

std::vector<mpz_class> theta_coeffs(int order) { return series_theta(order).pow(4).dense(0); }

template <bool Parallel>
void BM_Convolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto a = theta_coeffs(n);
  const auto b = series_euler(n).reciprocal().dense(0);
  for (auto _ : state) {
    auto c = Parallel ? kernels::parallel::convolve<mpz_class>(a, b, a.size())
                      : kernels::serial::convolve<mpz_class>(a, b, a.size());
    benchmark::DoNotOptimize(c.data());
  }
  state.SetComplexityN(n);
}

template <bool Parallel>
void BM_VerifySweep(benchmark::State& state) {
  const PrecisionContext ctx(static_cast<int>(state.range(0)));
  VerifyOptions opt;
  opt.samples = 10;
  opt.parallel = Parallel;
  for (auto _ : state) {
    auto r = verify("modular-relation", ctx, opt);
    benchmark::DoNotOptimize(r.pass);
  }
}

template <bool Parallel>
void BM_PartitionTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto t = Parallel ? parallel::count_table(n, PartitionPredicate::PartsMod5In14)
                      : serial::count_table(n, PartitionPredicate::PartsMod5In14);
    benchmark::DoNotOptimize(t.data());
  }
}

}  // namespace

BENCHMARK(BM_Convolve<false>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Convolve<true>)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySweep<false>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySweep<true>)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartitionTable<false>)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PartitionTable<true>)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
