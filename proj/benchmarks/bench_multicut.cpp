#include <benchmark/benchmark.h>

#include "multicut/consecutive.hpp"
#include "multicut/hilbert.hpp"
#include "multicut/kofn.hpp"
#include "multicut/lcm_filtration.hpp"
#include "multicut/oracle.hpp"

namespace {

using namespace multicut;

// Full filtration of J_{2,n}: closed-form enumeration, pruned lcm folding and
// the naive all-subsets route.
void BM_ConsFiltrationClosedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t total = 0;
    for (int i = 1; i <= n - 1; ++i) total += cons_multicut_ideal(2, n, i).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ConsFiltrationClosedForm)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ConsFiltrationLcmFold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MonomialIdeal base = cons_ideal(2, n);
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t i = 1; i <= base.size(); ++i) total += lcm_fold(base, i).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ConsFiltrationLcmFold)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ConsFiltrationNaive(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MonomialIdeal base = cons_ideal(2, n);
  for (auto _ : state) {
    std::size_t total = 0;
    for (std::size_t i = 1; i <= base.size(); ++i) total += naive_multicut_gens(base, i).size();
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ConsFiltrationNaive)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_CountGenerators(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigCount total = 0;
    for (int i = 1; i <= n - 4; ++i) total += count_generators(5, n, i);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_CountGenerators)->Arg(20)->Arg(40)->Arg(63);

void BM_KofnStaircaseLcmFold(benchmark::State& state) {
  MonomialIdeal base = kofn_ideal(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (std::size_t l = 1; l <= base.size(); ++l) benchmark::DoNotOptimize(lcm_fold(base, l));
  }
}
BENCHMARK(BM_KofnStaircaseLcmFold)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_HilbertNumeratorCons(benchmark::State& state) {
  MonomialIdeal base = cons_ideal(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator(base));
}
BENCHMARK(BM_HilbertNumeratorCons)->Arg(10)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_HilbertNumeratorKofn(benchmark::State& state) {
  MonomialIdeal base = kofn_ideal(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_numerator(base));
}
BENCHMARK(BM_HilbertNumeratorKofn)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SurvivorCons(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MonomialIdeal base = cons_ideal(2, n);
  ProbabilityVector p = ProbabilityVector::iid(n, 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(survivor(base, p, SystemTag{SystemKind::kConsecutive, 2, n}));
  }
}
BENCHMARK(BM_SurvivorCons)->Arg(9)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Bonferroni(benchmark::State& state) {
  MonomialIdeal base = cons_ideal(2, 16);
  ProbabilityVector p = ProbabilityVector::iid(16, 0.3);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bonferroni(base, p, depth));
}
BENCHMARK(BM_Bonferroni)->Arg(2)->Arg(5)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_StateSpaceOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  MonomialIdeal base = cons_ideal(2, n);
  ProbabilityVector p = ProbabilityVector::iid(n, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_survivor(base, p));
}
BENCHMARK(BM_StateSpaceOracle)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
