#include <benchmark/benchmark.h>

#include "knotprime/barred.hpp"
#include "knotprime/corpus.hpp"
#include "knotprime/engine.hpp"
#include "knotprime/factor.hpp"

using namespace knotprime;

namespace {

const Laurent kTrefoil = parse_laurent("t + s^-1 + s^-2*t^-1");
const Laurent kFigureEight = parse_laurent("s*t + 3 + s^-1*t^-1");

void BM_FactorProduct(benchmark::State& state) {
  // Generic (non-diagonal) support goes through the Kronecker path.
  Laurent p = Laurent::one();
  const char* pieces[] = {"s^2*t^2 + s^2*t + t + 1", "3*s*t^2 - s + t + 2", "s^3*t + 2*s*t^3 - 1",
                          "s*t + s + 2*t^2 + 1"};
  for (int k = 0; k < state.range(0); ++k) p = p * parse_laurent(pieces[k]);
  auto c = canonicalize(p).first;
  for (auto _ : state) benchmark::DoNotOptimize(factor_canonical(c));
}
BENCHMARK(BM_FactorProduct)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SymmetricFactorizations(benchmark::State& state) {
  Laurent omega = Laurent::one();
  for (int k = 0; k < state.range(0); ++k) omega = omega * (k % 2 ? kFigureEight : kTrefoil);
  for (auto _ : state) benchmark::DoNotOptimize(maximal_symmetric_factorizations(omega));
}
BENCHMARK(BM_SymmetricFactorizations)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ReduceTensorPower(benchmark::State& state) {
  auto c = corpus::torus_staircase(3);
  for (int k = 1; k < state.range(0); ++k) c = tensor(c, corpus::figure_eight_complex());
  for (auto _ : state) benchmark::DoNotOptimize(reduce(c));
  state.counters["generators"] = static_cast<double>(c.size());
}
BENCHMARK(BM_ReduceTensorPower)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_RankOracle(benchmark::State& state) {
  auto c = corpus::torus_staircase(3);
  for (int k = 1; k < state.range(0); ++k) c = tensor(c, corpus::figure_eight_complex());
  for (auto _ : state) benchmark::DoNotOptimize(barcode_via_ranks(c));
}
BENCHMARK(BM_RankOracle)->DenseRange(1, 3)->Unit(benchmark::kMicrosecond);

void BM_AnalyzeCorpus(benchmark::State& state) {
  std::vector<KnotInput> inputs;
  for (const auto& f : corpus::builtin()) inputs.push_back(f.input);
  for (auto _ : state) benchmark::DoNotOptimize(batch(inputs, 1));
}
BENCHMARK(BM_AnalyzeCorpus)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
