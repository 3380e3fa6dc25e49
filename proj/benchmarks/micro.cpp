#include <benchmark/benchmark.h>

#include "stabledeg/flag_dd.hpp"
#include "stabledeg/graph_d.hpp"
#include "stabledeg/keyex.hpp"
#include "stabledeg/poly_map.hpp"
#include "stabledeg/public_rule.hpp"

namespace sd = stabledeg;

namespace {

const sd::Ring& z256() {
  static const sd::Ring r = sd::Ring::parse("Z:256");
  return r;
}

void BM_WalkSymbolic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto p = static_cast<std::size_t>(state.range(1));
  sd::Rng rng(1);
  const sd::GraphD d(z256(), n);
  const sd::DWalk w = sd::random_walk(z256(), p, rng);
  for (auto _ : state) benchmark::DoNotOptimize(d.walk_symbolic(w));
}
BENCHMARK(BM_WalkSymbolic)->ArgsProduct({{10, 20, 40}, {10, 20}})->Unit(benchmark::kMillisecond);

void BM_ZwalkSymbolic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  sd::Rng rng(2);
  const sd::FlagGraph dd(z256(), n - 1);
  const sd::ZWalk w = sd::random_zwalk(z256(), 8, rng);
  for (auto _ : state) benchmark::DoNotOptimize(dd.zwalk_symbolic(w));
}
BENCHMARK(BM_ZwalkSymbolic)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_ComposeWalkMaps(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  sd::Rng rng(3);
  const sd::GraphD d(z256(), n);
  const sd::PolyMap a = d.walk_symbolic(sd::random_walk(z256(), 4, rng));
  const sd::PolyMap b = d.walk_symbolic(sd::random_walk(z256(), 4, rng));
  for (auto _ : state) benchmark::DoNotOptimize(sd::compose(a, b));
}
BENCHMARK(BM_ComposeWalkMaps)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_Encrypt(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const sd::PublicRule rule = sd::make_public_rule(n, z256(), 60, 1, sd::KeygenRoute::compose);
  sd::Rng rng(4);
  std::vector<sd::RingElem> x(n);
  for (auto& c : x) c = z256().sample(rng);
  for (auto _ : state) benchmark::DoNotOptimize(sd::encrypt(rule.public_map, x));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_Encrypt)->DenseRange(20, 100, 20)->Unit(benchmark::kMillisecond)->Complexity();

void BM_BobPower(benchmark::State& state) {
  sd::SecretParams params;
  params.n = static_cast<std::size_t>(state.range(0));
  const sd::PrivateSeed secret = sd::make_secret(params, 5);
  const sd::PolyMap b = sd::make_base(secret);
  for (auto _ : state) benchmark::DoNotOptimize(sd::bob_power(b, 37));
}
BENCHMARK(BM_BobPower)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
