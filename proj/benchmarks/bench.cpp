#include <benchmark/benchmark.h>

#include "liesq/decomp.hpp"
#include "liesq/matrixrep.hpp"

using namespace liesq;

namespace {

void BM_WeylDim(benchmark::State& state) {
  const auto& rs = RootSystem::get({Family::E8, 8});
  Weight adj = rs.highest_root();
  for (auto _ : state) benchmark::DoNotOptimize(rs.weyl_dim(adj));
}
BENCHMARK(BM_WeylDim);

void BM_WeightSystem(benchmark::State& state) {
  const auto& rs = RootSystem::get({Family::F4, 4});
  for (auto _ : state) benchmark::DoNotOptimize(rs.weight_system({1, 0, 0, 0}));
}
BENCHMARK(BM_WeightSystem);

void BM_TensorDecompose(benchmark::State& state) {
  auto g = *SemisimpleAlgebra::parse("e6");
  Weight w{1, 0, 0, 0, 0, 0};
  for (auto _ : state) benchmark::DoNotOptimize(tensor_decompose(g, w, w));
}
BENCHMARK(BM_TensorDecompose);

void BM_AltSymSquares(benchmark::State& state) {
  auto g = *SemisimpleAlgebra::parse("so10");
  Weight w{0, 0, 0, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(alt_sym_squares(g, w));
}
BENCHMARK(BM_AltSymSquares);

void BM_ScanTables(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_tables(SquareKind::alt, (int)state.range(0), 3));
}
BENCHMARK(BM_ScanTables)->Arg(4)->Arg(8);

void BM_CommutantExact(benchmark::State& state) {
  auto r = tensor_square(standard_generators(ClassicalFamily::su, (int)state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(commutant_dimension(r));
}
BENCHMARK(BM_CommutantExact)->Arg(2)->Arg(3)->Arg(4);

void BM_CommutantFloat(benchmark::State& state) {
  auto re = tensor_square(standard_generators(ClassicalFamily::su, (int)state.range(0)));
  MatrixRep r;
  r.dim = re.dim;
  r.flt = re.to_float();
  for (auto _ : state)
    benchmark::DoNotOptimize(commutant(r, Backend::floating, 1e-9));
}
BENCHMARK(BM_CommutantFloat)->Arg(2)->Arg(3)->Arg(4);

void BM_LieClosure(benchmark::State& state) {
  auto r = standard_generators(ClassicalFamily::su, (int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lie_closure(r));
}
BENCHMARK(BM_LieClosure)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
