// Serial reference vs OpenMP enumeration kernels on random instances.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <limits>

#include "fairmix/cli/commands.hpp"
#include "fairmix/kernels/enumeration.hpp"

using namespace fairmix;

namespace {

Instance make(std::size_t n, std::size_t m) {
  cli::GenOptions options;
  options.agents = n;
  options.items = m;
  options.seed = 7;
  return cli::to_instance(cli::generate_instance(options));
}

kernels::ValueTable<std::int64_t> table_for(const Instance& inst) {
  std::vector<Rational> shares;
  for (std::size_t i = 0; i < inst.agents(); ++i) shares.push_back(proportional_share(inst, i));
  return *kernels::integer_table(inst, shares);
}

template <bool Parallel>
void count_prop1(benchmark::State& state) {
  const Instance inst = make(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const auto table = table_for(inst);
  const auto total = *kernels::allocation_count(inst.agents(), inst.items(), ~std::uint64_t{0});
  for (auto _ : state) {
    auto r = Parallel ? kernels::count_satisfying_parallel(table, kernels::Property::prop1, total)
                      : kernels::count_satisfying_serial(table, kernels::Property::prop1, total);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * total));
}

// A baseline nothing dominates forces a full scan.
template <bool Parallel>
void full_po_scan(benchmark::State& state) {
  const Instance inst = make(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(1)));
  const auto table = table_for(inst);
  const auto total = *kernels::allocation_count(inst.agents(), inst.items(), ~std::uint64_t{0});
  std::vector<std::int64_t> baseline(inst.agents(), std::numeric_limits<std::int64_t>::max() / 2);
  for (auto _ : state) {
    auto r = Parallel ? kernels::first_dominating_parallel(table, baseline, total)
                      : kernels::first_dominating_serial(table, baseline, total);
    benchmark::DoNotOptimize(r);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * total));
}

}  // namespace

BENCHMARK(count_prop1<false>)->Args({3, 8})->Args({4, 9})->Args({5, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(count_prop1<true>)->Args({3, 8})->Args({4, 9})->Args({5, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(full_po_scan<false>)->Args({3, 8})->Args({4, 9})->Args({5, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(full_po_scan<true>)->Args({3, 8})->Args({4, 9})->Args({5, 9})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
