#include <benchmark/benchmark.h>

#include "hopfcert/constructors.hpp"
#include "hopfcert/verifier.hpp"

using namespace hopfcert;

namespace {

// k inside kV4 inside kA4 inside kS4.
std::vector<Subspace> s4_chain(const GroupTable& g, const HopfPtr& h) {
  const Field& f = h->field();
  const Subgroup a4 = commutator_subgroup(g);
  std::vector<std::size_t> v4;
  for (auto e : commutator_subgroup(a4.table).elements) v4.push_back(a4.elements[e]);
  return {Subspace::span(f, g.order(), {h->algebra().unit()}), group_subalgebra_span(g, make_subgroup(g, v4), f),
          group_subalgebra_span(g, a4, f), Subspace::whole(f, g.order())};
}

void BM_FrobeniusKS4(benchmark::State& state) {
  const GroupTable g = builtin_group("S4");
  const HopfPtr h = group_algebra(g, Field::create(5, 1));
  const std::vector<Subspace> chain = s4_chain(g, h);
  VerifyOptions opt;
  opt.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cmd_frobenius_check(h, chain, opt));
}
BENCHMARK(BM_FrobeniusKS4)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_CliffordKS3(benchmark::State& state) {
  const GroupTable g = builtin_group("S3");
  const Field f = Field::create(7, 1);
  const HopfPtr h = group_algebra(g, f);
  const Subspace k = group_subalgebra_span(g, commutator_subgroup(g), f);
  for (auto _ : state) benchmark::DoNotOptimize(cmd_clifford_report(h, k, {}));
}
BENCHMARK(BM_CliffordKS3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
