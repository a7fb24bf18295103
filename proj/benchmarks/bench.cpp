#include <benchmark/benchmark.h>

#include "qhcis/omega.hpp"

using namespace qhcis;

static void bm_root_system_e8(benchmark::State& state) {
  for (auto _ : state) {
    RootSystem rs = RootSystem::build({Family::E, 8});
    benchmark::DoNotOptimize(rs.num_positive());
  }
}
BENCHMARK(bm_root_system_e8);

static void bm_structure_constants_e6(benchmark::State& state) {
  RootSystem rs = RootSystem::build({Family::E, 6});
  for (auto _ : state) {
    StructureConstants sc = StructureConstants::build(rs);
    benchmark::DoNotOptimize(sc.N(1, 2));
  }
}
BENCHMARK(bm_structure_constants_e6);

static void bm_klimyk_b7(benchmark::State& state) {
  ParabolicCase c = build_case("B7(3)");
  Weight hw = c.roots().weight_of(c.xi_gamma);
  WeightSystem zn = zn_weight_system(c);
  for (auto _ : state) {
    auto dec = klimyk_decompose(*c.model, c.lgamma_simples, hw, zn);
    benchmark::DoNotOptimize(dec.size());
  }
}
BENCHMARK(bm_klimyk_b7);

static void bm_solve_special_value_e7(benchmark::State& state) {
  ParabolicCase c = build_case("E7(6)");
  auto sc = special_constituents(c)[0];
  for (auto _ : state) {
    auto res = solve_special_value(c, sc);
    benchmark::DoNotOptimize(res.s_value);
  }
}
BENCHMARK(bm_solve_special_value_e7);

static void bm_certificate_f4(benchmark::State& state) {
  ParabolicCase c = build_case("F4(4)");
  auto sc = special_constituents(c)[0];
  auto sys = generate_system(c, sc);
  auto ys = certificate_basis(c);
  for (auto _ : state) {
    bool ok = conformal_certificate(c, sys.ops, QuadExt(-1), ys);
    benchmark::DoNotOptimize(ok);
  }
}
BENCHMARK(bm_certificate_f4);

BENCHMARK_MAIN();
