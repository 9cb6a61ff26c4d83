#include <benchmark/benchmark.h>

#include "droot/digital_root.hpp"
#include "droot/oracle.hpp"
#include "droot/sieve.hpp"

namespace {

void BM_DigitalRoot(benchmark::State& state) {
  std::int64_t n = 123456789;
  for (auto _ : state) {
    benchmark::DoNotOptimize(droot::digital_root(n++));
  }
}
BENCHMARK(BM_DigitalRoot);

void BM_DrPow(benchmark::State& state) {
  const auto base = droot::DigitalRoot::from_value(5);
  std::int64_t n = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(droot::dr_pow(base, n));
    n = n % 1000 + 1;
  }
}
BENCHMARK(BM_DrPow);

void BM_PowerTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(droot::power_table(state.range(0)));
  }
}
BENCHMARK(BM_PowerTable)->Arg(45)->Arg(1000);

void BM_SieveMordell(benchmark::State& state) {
  const auto eq = droot::parse_equation("x^2 = y^3 - 2");
  for (auto _ : state) {
    benchmark::DoNotOptimize(droot::sieve(eq));
  }
}
BENCHMARK(BM_SieveMordell);

void BM_SieveBeal(benchmark::State& state) {
  const auto eq = droot::parse_equation("A^x + B^y = C^z", {{"x", 3}, {"y", 3}, {"z", 3}});
  const droot::EnumerationOptions options{droot::kDefaultBudget, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(droot::sieve(eq, options));
  }
}
BENCHMARK(BM_SieveBeal)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SearchPell(benchmark::State& state) {
  const auto eq = droot::parse_equation("x^2 - 2*y^2 = 1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(droot::search(eq, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1) * (2 * state.range(0) + 1));
}
BENCHMARK(BM_SearchPell)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_FermatExtension(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(droot::fermat_extension_check(1000, 31));
  }
}
BENCHMARK(BM_FermatExtension)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
