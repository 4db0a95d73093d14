#include <benchmark/benchmark.h>

#include <random>

#include "wds/capacity.hpp"
#include "wds/cyclicity.hpp"
#include "wds/dirichlet.hpp"
#include "wds/families.hpp"
#include "wds/kernel.hpp"

using namespace wds;

namespace {

OuterFunction sample_outer(std::size_t n) {
  std::mt19937_64 rng(3);
  return random_trig_outer(rng, n);
}

void BM_OuterFromLogModulus(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  std::vector<double> u(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = 0.3 * std::cos(3.0 * kTwoPi * double(k) / double(n));
  for (auto _ : st) benchmark::DoNotOptimize(outer_from_log_modulus(u));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_OuterFromLogModulus)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

void BM_DirichletRoutes(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  const HardyFunction f(sample_outer(n));
  const SuperharmonicWeight w = st.range(1) ? family::standard_alpha(0.5) : family::classical();
  for (auto _ : st) benchmark::DoNotOptimize(dirichlet(f, w, {.n = n}));
}
BENCHMARK(BM_DirichletRoutes)->ArgsProduct({{1024, 4096}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_DouglasTypeForm(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  const HardyFunction f(sample_outer(n));
  const SuperharmonicWeight w = family::atomic({{0.3, 1.0}, {cplx(0.0, -0.5), 0.5}});
  for (auto _ : st) benchmark::DoNotOptimize(douglas_type_form(f, w, n));
}
BENCHMARK(BM_DouglasTypeForm)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_AssembleForm(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  const SuperharmonicWeight w = st.range(1) ? family::standard_alpha(0.5) : family::atomic({{0.0, 1.0}});
  for (auto _ : st) benchmark::DoNotOptimize(assemble_form(w, n));
}
BENCHMARK(BM_AssembleForm)->ArgsProduct({{256, 1024}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_VariationalCapacity(benchmark::State& st) {
  const std::size_t n = static_cast<std::size_t>(st.range(0));
  const DirichletFormMatrix q = assemble_form(family::atomic({{0.0, 1.0}}), n);
  const BoundarySet e = BoundarySet::arc(0.0, 0.25);
  for (auto _ : st) benchmark::DoNotOptimize(variational_capacity(e, 0.0, q));
}
BENCHMARK(BM_VariationalCapacity)->Arg(256)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_KernelDiag(benchmark::State& st) {
  const DiscMeasure mu = family::standard_alpha_measure(0.5);
  const double delta = std::ldexp(1.0, -static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(kernel_diag_estimate(cplx(1.0 - delta), mu));
}
BENCHMARK(BM_KernelDiag)->Arg(4)->Arg(14)->Arg(30);

void BM_CyclicDistance(benchmark::State& st) {
  const HardyFunction f(sample_outer(1024));
  const SuperharmonicWeight w = family::atomic({{0.5, 1.0}});
  for (auto _ : st) benchmark::DoNotOptimize(cyclic_distance(f, w, static_cast<int>(st.range(0))));
}
BENCHMARK(BM_CyclicDistance)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
