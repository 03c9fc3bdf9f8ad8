// Serial reference against OpenMP kernels on representative inputs.
#include "gwl/filtration.hpp"
#include "gwl/kernels.hpp"
#include "gwl/models.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace gwl;

namespace {

MultiPoly random_poly(std::size_t terms, unsigned seed) {
  std::mt19937 rng(seed);
  const auto vars = numbered_variables("x", 5);
  MultiPoly p(vars);
  std::uniform_int_distribution<unsigned> e(0, 6);
  std::uniform_int_distribution<long> c(-100, 100);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent x(5);
    for (auto& v : x) v = e(rng);
    p.add_term(x, c(rng));
  }
  return p;
}

void BM_PolyProductSerial(benchmark::State& st) {
  const MultiPoly a = random_poly(st.range(0), 1), b = random_poly(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::poly_product_serial(a, b));
}
void BM_PolyProductParallel(benchmark::State& st) {
  const MultiPoly a = random_poly(st.range(0), 1), b = random_poly(st.range(0), 2);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::poly_product_parallel(a, b));
}
BENCHMARK(BM_PolyProductSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_PolyProductParallel)->Arg(64)->Arg(256);

F2Poly omega_input(std::size_t n) { return omega(n, 1u << (n - 1)); }

void BM_F2ProductSerial(benchmark::State& st) {
  const F2Poly w = omega_input(4);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::f2_product_serial(w, w));
}
void BM_F2ProductParallel(benchmark::State& st) {
  const F2Poly w = omega_input(4);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::f2_product_parallel(w, w));
}
BENCHMARK(BM_F2ProductSerial);
BENCHMARK(BM_F2ProductParallel);

std::vector<GroupElement> level_generators(const RingModel& m) {
  std::vector<GroupElement> out;
  for (const auto& s : gamma_levels(m, 4))
    for (const auto& g : s.generators()) out.push_back(g);
  return out;
}

void BM_PairwiseSerial(benchmark::State& st) {
  const RingModel m = gw_surface_cxp1(3);
  const auto gens = level_generators(m);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::pairwise_products_serial(m, gens, gens));
}
void BM_PairwiseParallel(benchmark::State& st) {
  const RingModel m = gw_surface_cxp1(3);
  const auto gens = level_generators(m);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::pairwise_products_parallel(m, gens, gens));
}
BENCHMARK(BM_PairwiseSerial);
BENCHMARK(BM_PairwiseParallel);

void BM_ClauwensSerial(benchmark::State& st) {
  const RingModel m = gw_surface_cxp1(3);
  const auto t = torsion_elements(m);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::clauwens_scan_serial(m, t));
}
void BM_ClauwensParallel(benchmark::State& st) {
  const RingModel m = gw_surface_cxp1(3);
  const auto t = torsion_elements(m);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::clauwens_scan_parallel(m, t));
}
BENCHMARK(BM_ClauwensSerial);
BENCHMARK(BM_ClauwensParallel);

}  // namespace

BENCHMARK_MAIN();
