#include <benchmark/benchmark.h>

#include "mzva/axioms.hpp"
#include "mzva/c2.hpp"
#include "mzva/fock.hpp"
#include "mzva/mz_vertex.hpp"
#include "mzva/parse.hpp"

using namespace mzva;

namespace {

// All u_n v over basis monomials of weight <= W, on a fresh engine (no cache).
void BM_ModeActionGrid(benchmark::State& state) {
  const auto t = FlavorTable::orthonormal(static_cast<int>(state.range(1)));
  const auto basis = basis_monomials_up_to(t, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ModeEngine e(t);
    for (const auto& u : basis)
      for (const auto& v : basis)
        for (int n = -3; n <= 3; ++n) benchmark::DoNotOptimize(e.mode_action(u, n, v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.size() * basis.size() * 7));
}
BENCHMARK(BM_ModeActionGrid)->Args({3, 1})->Args({3, 2})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_NormalOrderOracleGrid(benchmark::State& state) {
  const auto t = FlavorTable::orthonormal(static_cast<int>(state.range(1)));
  const auto basis = basis_monomials_up_to(t, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& u : basis)
      for (const auto& v : basis)
        for (int n = -3; n <= 3; ++n)
          benchmark::DoNotOptimize(normal_order_oracle(t, u, n, FockElement::monomial(v)));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(basis.size() * basis.size() * 7));
}
BENCHMARK(BM_NormalOrderOracleGrid)->Args({3, 1})->Args({3, 2})->Args({4, 2})->Unit(benchmark::kMillisecond);

void BM_HighWeightProduct(benchmark::State& state) {
  const auto t = FlavorTable::orthonormal(2);
  const auto u = parse_fock("a1(-1) a1(-1) a2(-1) a2(-1) a1(-2) vac", t);
  const auto v = parse_fock("a2(-3) a1(-1) a1(-1) vac", t);
  for (auto _ : state) {
    ModeEngine e(t);
    benchmark::DoNotOptimize(e.mode_action(u, static_cast<int>(state.range(0)), v));
  }
}
BENCHMARK(BM_HighWeightProduct)->Arg(-3)->Arg(0)->Arg(3);

void BM_CnSpanningSet(benchmark::State& state) {
  const auto t = FlavorTable::orthonormal(2);
  for (auto _ : state) {
    ModeEngine e(t);
    benchmark::DoNotOptimize(cn_spanning_set(e, 2, static_cast<int>(state.range(0))).dimension());
  }
}
BENCHMARK(BM_CnSpanningSet)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ImageSolve(benchmark::State& state) {
  const auto r = VariableRoster::image(2);
  const auto p = parse_poly("1 - zeta1 x1 - zeta2 x2 + zeta1 zeta2 x1 x2", r);
  for (auto _ : state) benchmark::DoNotOptimize(image_solve(p, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ImageSolve)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AxiomSuite(benchmark::State& state, const char* id) {
  AxiomOptions o;
  o.weight = 3;
  o.flavors = 2;
  for (auto _ : state) benchmark::DoNotOptimize(run_suite(id, o).checks);
}
BENCHMARK_CAPTURE(BM_AxiomSuite, eq7, "eq7")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AxiomSuite, eq8, "eq8")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_AxiomSuite, c2v, "c2v")->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
