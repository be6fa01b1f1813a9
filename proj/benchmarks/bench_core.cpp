#include <benchmark/benchmark.h>

#include "cybra/brauer.hpp"
#include "cybra/combinat.hpp"
#include "cybra/hecke.hpp"
#include "cybra/matrix.hpp"
#include "cybra/repanalysis.hpp"
#include "cybra/tensoro.hpp"
#include "cybra/weights.hpp"

using namespace cybra;

namespace {

std::vector<Rat> generic_u() { return {rat(1, 3), rat(1, 7)}; }

Multipartition mp(std::vector<std::vector<int>> comps) {
  std::vector<Partition> ps;
  for (auto& c : comps) ps.emplace_back(std::move(c));
  return Multipartition(std::move(ps));
}

TensorDatum micro_datum() {
  RootDatum rd{LieType::D, 4, {4}, 1};
  return make_tensor_datum(rd, {rat(-7, 3)}, 2);
}

void BM_brauer_construct(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BrauerAlgebra B(make_brauer_params(2, r, generic_u()));
    benchmark::DoNotOptimize(B.dimension());
  }
}
BENCHMARK(BM_brauer_construct)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_cell_gram(benchmark::State& state) {
  BrauerAlgebra B(make_brauer_params(2, 3, generic_u()));
  const Multipartition lambda = mp({{1}, {}});
  for (auto _ : state) {
    auto cd = B.cell_module(1, lambda);
    benchmark::DoNotOptimize(rank_bareiss(cd.gram));
  }
}
BENCHMARK(BM_cell_gram)->Unit(benchmark::kMillisecond);

void BM_decomposition_matrix(benchmark::State& state) {
  BrauerAlgebra B(make_brauer_params(2, 2, {Rat(1), Rat(0)}));
  for (auto _ : state) {
    auto dm = decomposition_matrix(B);
    benchmark::DoNotOptimize(dm.entries.size());
  }
}
BENCHMARK(BM_decomposition_matrix)->Unit(benchmark::kMillisecond);

void BM_hecke_multiply(benchmark::State& state) {
  HeckeAlgebra H(HeckeParams{2, 4, {rat(1, 2), Rat(0)}});
  const HeckeElement a = H.multiply(H.x(2), H.s(1));
  const HeckeElement b = H.multiply(H.s(3), H.x(4));
  for (auto _ : state) {
    auto c = H.multiply(a, b);
    benchmark::DoNotOptimize(c.terms.size());
  }
}
BENCHMARK(BM_hecke_multiply)->Unit(benchmark::kMicrosecond);

void BM_act_X(benchmark::State& state) {
  const TensorDatum td = micro_datum();
  TruncatedVector v;
  v.add(PBWMonomial{}, {-4, -3}, Rat(1));
  v = act_X(td, 1, v);
  for (auto _ : state) {
    auto w = act_X(td, 2, v);
    benchmark::DoNotOptimize(w.is_zero());
  }
}
BENCHMARK(BM_act_X)->Unit(benchmark::kMicrosecond);

void BM_verify_singular(benchmark::State& state) {
  const TensorDatum td = micro_datum();
  BrauerAlgebra B(make_brauer_params(td.a, td.r, td.u));
  const Multipartition lambda = mp({{1}, {1}});
  for (auto _ : state) {
    auto rep = verify_singular(td, B, 0, lambda);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_verify_singular)->Unit(benchmark::kMillisecond);

void BM_K_r_bfs(benchmark::State& state) {
  RootDatum rd{LieType::D, 5, {2, 5}, 1};
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto k = K_r_bfs(rd, r);
    benchmark::DoNotOptimize(k.size());
  }
}
BENCHMARK(BM_K_r_bfs)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_saturation_check(benchmark::State& state) {
  RootDatum rd{LieType::D, 4, {4}, 1};
  for (auto _ : state) {
    auto rep = saturation_check(rd, {rat(-7, 3)}, 3);
    benchmark::DoNotOptimize(rep.saturated);
  }
}
BENCHMARK(BM_saturation_check)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
