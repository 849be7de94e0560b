#include <benchmark/benchmark.h>

#include <sstream>
#include <vector>

#include "c48/extract.hpp"
#include "c48/generate.hpp"
#include "c48/harness.hpp"
#include "c48/oracle.hpp"

namespace {

std::vector<c48::Graph> hypothesis_sample(int n, std::uint64_t count) {
    c48::GenSpec spec;
    spec.mode = c48::GenSpec::Mode::random;
    spec.n = n;
    spec.edge_probability = 0.5;
    spec.seed = 1;
    spec.count = count;
    spec.filter = c48::GenFilter::theorem_preconditions;
    c48::RandomGraphStream stream(spec);
    std::vector<c48::Graph> out;
    while (auto g = stream.next()) out.push_back(*g);
    return out;
}

void BM_extract(benchmark::State& state) {
    auto graphs = hypothesis_sample(static_cast<int>(state.range(0)), 32);
    std::size_t i = 0;
    for (auto _ : state) {
        auto res = c48::extract_with_fallback(graphs[i++ % graphs.size()]);
        benchmark::DoNotOptimize(res.witness.vertices.data());
    }
}
BENCHMARK(BM_extract)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_oracle_c4(benchmark::State& state) {
    auto graphs = hypothesis_sample(static_cast<int>(state.range(0)), 16);
    std::size_t i = 0;
    for (auto _ : state) {
        auto r = c48::find_cycle_of_length(graphs[i++ % graphs.size()], 4);
        benchmark::DoNotOptimize(r.status);
    }
}
BENCHMARK(BM_oracle_c4)->Arg(16)->Arg(64);

void BM_oracle_c8_petersen(benchmark::State& state) {
    c48::Graph p = c48::fixture("petersen");
    for (auto _ : state) {
        auto r = c48::find_cycle_of_length(p, 8);
        benchmark::DoNotOptimize(r.status);
    }
}
BENCHMARK(BM_oracle_c8_petersen);

void BM_graph6_round_trip(benchmark::State& state) {
    auto graphs = hypothesis_sample(static_cast<int>(state.range(0)), 16);
    std::size_t i = 0;
    for (auto _ : state) {
        auto s = c48::encode_graph6(graphs[i++ % graphs.size()]);
        auto g = c48::parse_graph6(s);
        benchmark::DoNotOptimize(g.vertex_count());
    }
}
BENCHMARK(BM_graph6_round_trip)->Arg(32)->Arg(128);

void BM_run_verify(benchmark::State& state) {
    auto graphs = hypothesis_sample(16, 256);
    for (auto _ : state) {
        std::size_t i = 0;
        c48::GraphSource src = [&]() -> std::optional<c48::GraphInput> {
            if (i >= graphs.size()) return std::nullopt;
            return c48::GraphInput{graphs[i++]};
        };
        c48::HarnessOptions opts;
        opts.jobs = static_cast<int>(state.range(0));
        opts.oracle = c48::OracleMode::off;
        std::ostringstream out;
        auto summary = c48::run_verify(src, opts, out);
        benchmark::DoNotOptimize(summary.graphs);
    }
}
BENCHMARK(BM_run_verify)->Arg(1)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
