#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "tautilt/tautilt.hpp"

using namespace tautilt;

namespace {

const char* const kNames[] = {"a2", "a3lin", "a3rel", "skewed", "wild4"};

AlgebraPtr load(std::size_t k) {
    std::ifstream in(std::string(TAUTILT_FIXTURE_DIR) + "/" + kNames[k] + ".alg");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_algebra(ss.str());
}

void BM_Enumerate(benchmark::State& state) {
    const AlgebraPtr a = load(static_cast<std::size_t>(state.range(0)));
    state.SetLabel(kNames[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_indecomposables(a));
}

void BM_Hasse(benchmark::State& state) {
    const ARIndex ix = ARIndex::of(load(static_cast<std::size_t>(state.range(0))));
    state.SetLabel(kNames[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(hasse(ix));
}

void BM_Oracle(benchmark::State& state) {
    const ARIndex ix = ARIndex::of(load(static_cast<std::size_t>(state.range(0))));
    state.SetLabel(kNames[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_torsion_classes_oracle(ix));
}

void BM_Probe(benchmark::State& state) {
    const AlgebraPtr a = load(static_cast<std::size_t>(state.range(0)));
    state.SetLabel(kNames[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(finiteness_probe(a));
}

void BM_Decompose(benchmark::State& state) {
    const ARIndex ix = ARIndex::of(load(4));
    std::vector<Representation> parts;
    for (std::size_t k = 0; k < ix.size(); k += 3) parts.push_back(ix.module(k));
    const Representation m = direct_sum_module(parts);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}

}  // namespace

BENCHMARK(BM_Enumerate)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Hasse)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Probe)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
