#include <benchmark/benchmark.h>

#include "hopfcert/matrix.hpp"
#include "hopfcert/poly.hpp"
#include "hopfcert/rng.hpp"

using namespace hopfcert;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(rng.below(f.order()));
  return m;
}

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::create(2, static_cast<std::uint32_t>(state.range(0)));
  Elem acc = 1;
  for (auto _ : state) {
    for (Elem x = 1; x < f.order(); ++x) acc = f.add(f.mul(acc, x), 1);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * (f.order() - 1));
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(4)->Arg(8);

void BM_MatMul(benchmark::State& state) {
  const Field f = Field::create(7, 1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(f, n, 1), b = random_matrix(f, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatMul)->RangeMultiplier(2)->Range(8, 64);

void BM_Rref(benchmark::State& state) {
  const Field f = Field::create(3, 2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(f, n, 3);
  for (auto _ : state) {
    Matrix m = a;
    benchmark::DoNotOptimize(rref_in_place(m));
  }
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64);

void BM_CharPolyFactor(benchmark::State& state) {
  const Field f = Field::create(5, 1);
  const Matrix a = random_matrix(f, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(factor_poly(char_poly(a), 1));
}
BENCHMARK(BM_CharPolyFactor)->Arg(8)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
