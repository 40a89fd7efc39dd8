#include <benchmark/benchmark.h>

#include "dialectica/dial_laws.hpp"
#include "dialectica/instances.hpp"
#include "dialectica/logic.hpp"
#include "dialectica/monadic.hpp"

using namespace dialectica;

namespace {

LObject full(const LinearModel& D, std::size_t nx, std::size_t ny) {
  std::vector<Elem> e(nx * ny, D.base().unit());
  return D.tabulated(EffectiveSet::range(nx), EffectiveSet::range(ny), std::move(e));
}

void BM_Tensor(benchmark::State& state) {
  LinearModel D(boolean_lineale());
  const auto n = static_cast<std::size_t>(state.range(0));
  auto G = full(D, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(D.tensor(G, G));
}
BENCHMARK(BM_Tensor)->Arg(1)->Arg(2)->Arg(3);

void BM_Bang(benchmark::State& state) {
  Limits lim;
  lim.multiset_bound = static_cast<std::size_t>(state.range(0));
  LinearModel D(boolean_lineale(), lim);
  auto G = full(D, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(D.bang(G));
}
BENCHMARK(BM_Bang)->Arg(1)->Arg(2)->Arg(3);

void BM_HomSearch(benchmark::State& state) {
  LinearModel D(boolean_lineale());
  auto objs = small_objects(D, 2);
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (const auto& G : objs) {
      for (const auto& H : objs) total += hom_count(D, G, H);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_HomSearch)->Unit(benchmark::kMillisecond);

void BM_FindHomLarge(benchmark::State& state) {
  LinearModel D(boolean_lineale());
  auto G = second_law_instance(D);
  auto report = second_monad_law_check(D, G);
  for (auto _ : state) benchmark::DoNotOptimize(hom_exists(D, report.via_inner_mu, report.via_outer_mu));
}
BENCHMARK(BM_FindHomLarge)->Unit(benchmark::kMillisecond);

void BM_CategoryAudit(benchmark::State& state) {
  LinearModel D(boolean_lineale());
  auto objs = small_objects(D, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(category_audit(D, objs).all_passed());
}
BENCHMARK(BM_CategoryAudit)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Validity(benchmark::State& state) {
  LinearModel D(boolean_lineale());
  auto f = parse_formula("!(p * q) -o ?(p | q^)");
  Valuation v{{"p", D.base().unit()}, {"q", D.base().element("0")}};
  for (auto _ : state) benchmark::DoNotOptimize(is_valid(D, *f, v).valid);
}
BENCHMARK(BM_Validity);

void BM_FirstLaw(benchmark::State& state) {
  LinearModel D(boolean_lineale());
  auto G = full(D, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(first_monad_law_check(D, G).round_trips);
}
BENCHMARK(BM_FirstLaw);

}  // namespace
BENCHMARK_MAIN();
