#include <benchmark/benchmark.h>

#include "jmlat/decomposition.hpp"
#include "jmlat/structure.hpp"

using namespace jmlat;

namespace {

void BM_buchberger_l2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Lattice lat = build_Lk({n, n});
  Ideal I = joinmeet_generators(lat);
  MonomialOrder ord = chain_grevlex(lat);
  uint64_t pairs = 0;
  for (auto _ : state) {
    auto gb = buchberger(I, ord);
    pairs = gb.audit.processed;
    benchmark::DoNotOptimize(gb.basis.size());
  }
  state.counters["spairs"] = static_cast<double>(pairs);
  state.counters["nvars"] = lat.size();
}
BENCHMARK(BM_buchberger_l2)->DenseRange(2, 8);

void BM_reduce_basis_l2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Lattice lat = build_Lk({n, n});
  Ideal I = joinmeet_generators(lat);
  MonomialOrder ord = chain_grevlex(lat);
  auto gb = buchberger(I, ord);
  for (auto _ : state) {
    auto reduced = reduce_basis(gb);
    benchmark::DoNotOptimize(reduced.basis.size());
  }
}
BENCHMARK(BM_reduce_basis_l2)->DenseRange(2, 6);

void BM_certify_radical_on(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Lattice lat = build_On(n);
  MonomialOrder ord = rank_grevlex(lat);
  for (auto _ : state) {
    auto cert = certify_radical(lat, ord);
    benchmark::DoNotOptimize(cert.squarefree);
  }
}
BENCHMARK(BM_certify_radical_on)->DenseRange(2, 10, 2);

void BM_certify_radical_glued(benchmark::State& state) {
  Lattice lat = build_L2_glued(7, 7, 4, 2, 5);
  MonomialOrder ord = rank_grevlex(lat);
  for (auto _ : state) {
    auto cert = certify_radical(lat, ord);
    benchmark::DoNotOptimize(cert.squarefree);
  }
}
BENCHMARK(BM_certify_radical_glued);

void BM_verify_theorem2(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto cert = verify_theorem2(n, 1, 1);
    benchmark::DoNotOptimize(cert.equality);
  }
}
BENCHMARK(BM_verify_theorem2)->DenseRange(2, 6);

void BM_intersect_elimination(benchmark::State& state) {
  XYZ xyz = build_XYZ(3, 2, 1);
  VariableSet vars = xyz.vars;
  MonomialOrder ord = MonomialOrder::grevlex(vars.size());
  Ideal X = to_ideal(xyz.X.intersection, vars);
  Ideal Y = to_ideal(xyz.Y.intersection, vars);
  for (auto _ : state) {
    Ideal K = intersect(X, Y, ord);
    benchmark::DoNotOptimize(K.gens.size());
  }
}
BENCHMARK(BM_intersect_elimination);

void BM_search_order_m5(benchmark::State& state) {
  Lattice lat = build_Lk({1, 1, 1});
  for (auto _ : state) {
    auto report =
        search_squarefree_order(lat, {SearchStrategy::Kind::AllPermutationsRevlex});
    benchmark::DoNotOptimize(report.count_tested);
  }
}
BENCHMARK(BM_search_order_m5);

void BM_birkhoff_round_trip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Lattice lat = build_On(n);
  for (auto _ : state) {
    Poset ji = join_irreducibles(lat);
    Lattice jp = birkhoff(ji);
    benchmark::DoNotOptimize(jp.size());
  }
}
BENCHMARK(BM_birkhoff_round_trip)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
