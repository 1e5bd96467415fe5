#include <benchmark/benchmark.h>

#include "glprover/henkin.hpp"
#include "glprover/semantics.hpp"
#include "glprover/sequent.hpp"

using namespace glprover;

namespace {

const char* const kFormulas[] = {
    "Box (Box p --> p) --> Box p",
    "Box (p <-> q) --> (Box p <-> Box q)",
    "Not Box False --> Not Box Diam True",
    "Box (p <-> Not Box p) && Not Box Box False --> Not Box p && Not Box Not p",
    "Box (Box p || Box Not p) --> Box p || Box Not p",
    "Box (Box (p --> Box p) --> Box p) --> Box (p && Box q) --> Box Box q",
};

void BM_Search(benchmark::State& state) {
  const Formula f = parse(kFormulas[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(search(f));
  state.SetLabel(to_string(f));
}
BENCHMARK(BM_Search)->DenseRange(0, std::size(kFormulas) - 1);

void BM_CheckDerivation(benchmark::State& state) {
  const Formula f = parse(kFormulas[state.range(0)]);
  const Derivation d = std::get<Proved>(search(f)).derivation;
  for (auto _ : state) benchmark::DoNotOptimize(check_derivation(d, f));
  state.counters["nodes"] = static_cast<double>(d.node_count());
}
BENCHMARK(BM_CheckDerivation)->DenseRange(0, 3);

void BM_Oracle(benchmark::State& state) {
  const Formula f = parse(kFormulas[0]);
  const auto worlds = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_valid(f, worlds));
}
BENCHMARK(BM_Oracle)->DenseRange(1, 4);

void BM_StandardModel(benchmark::State& state) {
  const Formula f = parse("Box (Box p || Box Not p) --> Box p || Box Not p");
  for (auto _ : state) benchmark::DoNotOptimize(build_standard_model(f));
}
BENCHMARK(BM_StandardModel);

}  // namespace

BENCHMARK_MAIN();
