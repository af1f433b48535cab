// Microbenchmarks for the hot paths: group enumeration, the two direct
// solvers, the reduction pipeline and the tensor splitter. Fixtures are
// built outside the timed loops.

#include <benchmark/benchmark.h>

#include "h1forge/cohomology.hpp"
#include "h1forge/gmodule.hpp"
#include "h1forge/recipes.hpp"

namespace {

using namespace h1f;

SpecContext ctx(uint64_t p, uint32_t m, uint32_t dim) {
  return SpecContext{Field::make(p, m), dim};
}

SpecContext sl2_ctx(uint64_t q) {
  switch (q) {
    case 5: return ctx(5, 1, 2);
    case 7: return ctx(7, 1, 2);
    case 9: return ctx(3, 2, 2);
    case 13: return ctx(13, 1, 2);
    default: throw BadInput("no context wired for q=" + std::to_string(q));
  }
}

void BM_enumerate_sl2(benchmark::State& state) {
  const uint64_t q = uint64_t(state.range(0));
  for (auto _ : state) {
    GroupRef G = elaborate(GroupSpec{SLSpec{2, q}}, sl2_ctx(q));
    benchmark::DoNotOptimize(G->order());
  }
}
BENCHMARK(BM_enumerate_sl2)->Arg(5)->Arg(7)->Arg(9)->Arg(13);

void BM_h1_presentation_sl2(benchmark::State& state) {
  const uint64_t q = uint64_t(state.range(0));
  GModule M = elaborate_module(GroupSpec{SLSpec{2, q}}, sl2_ctx(q));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1_presentation(M).h1);
  }
}
BENCHMARK(BM_h1_presentation_sl2)->Arg(5)->Arg(9)->Arg(13);

void BM_h1_full_table_sl2(benchmark::State& state) {
  const uint64_t q = uint64_t(state.range(0));
  GModule M = elaborate_module(GroupSpec{SLSpec{2, q}}, sl2_ctx(q));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1_full_table(M).h1);
  }
}
BENCHMARK(BM_h1_full_table_sl2)->Arg(5)->Arg(9);

void BM_reduction_pipeline_tensor(benchmark::State& state) {
  GModule A = elaborate_module(GroupSpec{SLSpec{2, 3}}, ctx(3, 1, 2));
  GModule B = elaborate_module(GroupSpec{QuaternionSpec{8}}, ctx(3, 1, 2));
  GModule T = tensor_module(A, B);
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1_with_reductions(T).h1);
  }
}
BENCHMARK(BM_reduction_pipeline_tensor);

void BM_tensor_split(benchmark::State& state) {
  GModule A = elaborate_module(GroupSpec{SLSpec{2, 3}}, ctx(3, 1, 2));
  GModule B = elaborate_module(GroupSpec{QuaternionSpec{8}}, ctx(3, 1, 2));
  GModule T = tensor_module(A, B);
  auto basis = z1_basis(T);
  if (basis.empty()) {
    state.SkipWithError("Z^1 basis is empty");
    return;
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor_split(basis[0], T));
  }
}
BENCHMARK(BM_tensor_split);

void BM_jordan_full_table(benchmark::State& state) {
  const uint64_t p = uint64_t(state.range(0));
  GModule M = elaborate_module(
      GroupSpec{CyclicSpec{p, CyclicEmbedding::Jordan}}, ctx(p, 1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h1_full_table(M).h1);
  }
}
BENCHMARK(BM_jordan_full_table)->Arg(11)->Arg(31);

}  // namespace
