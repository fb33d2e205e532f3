#include <benchmark/benchmark.h>

#include "specturan/enumerate.hpp"
#include "specturan/extremal.hpp"
#include "specturan/spectral.hpp"

using namespace specturan;

namespace {

Hypergraph petersen() {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({5 + i, 5 + (i + 2) % 5});
    }
    return build(10, 2, edges);
}

}  // namespace

static void BM_CountCopiesC5InL10(benchmark::State& state) {
    Hypergraph c5 = cycle_graph(5);
    Hypergraph l10 = c5_blowup(10);
    for (auto _ : state) benchmark::DoNotOptimize(count_copies(c5, l10));
}
BENCHMARK(BM_CountCopiesC5InL10);

static void BM_DeriveWeightedC5L10(benchmark::State& state) {
    Hypergraph c5 = cycle_graph(5);
    Hypergraph l10 = c5_blowup(10);
    for (auto _ : state) benchmark::DoNotOptimize(derive_weighted(c5, l10));
}
BENCHMARK(BM_DeriveWeightedC5L10);

static void BM_CanonicalFormPetersen(benchmark::State& state) {
    Hypergraph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormPetersen);

static void BM_CanonicalFormTuran(benchmark::State& state) {
    Hypergraph g = turan_graph(static_cast<int>(state.range(0)), 3, 2);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g));
}
BENCHMARK(BM_CanonicalFormTuran)->Arg(6)->Arg(9)->Arg(12);

static void BM_SpectralP2(benchmark::State& state) {
    WeightedSGraph w = derive_weighted(cycle_graph(5), c5_blowup(10));
    SolverOptions opts;
    opts.restarts = 8;
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(w, 2.0, opts));
}
BENCHMARK(BM_SpectralP2);

static void BM_SpectralP1(benchmark::State& state) {
    WeightedSGraph w = derive_weighted(cycle_graph(5), c5_blowup(10));
    SolverOptions opts;
    opts.restarts = 4;
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius_p1(w, opts));
}
BENCHMARK(BM_SpectralP1);

static void BM_EnumerateTriangleFree(benchmark::State& state) {
    FamilySpec family = make_family({complete_graph(3, 2)});
    EnumerationOptions opts;
    opts.predicate = [family](const Hypergraph& h) { return is_free(h, family); };
    opts.hereditary = true;
    for (auto _ : state) {
        auto graphs = enumerate_graphs(static_cast<int>(state.range(0)), 2, opts);
        benchmark::DoNotOptimize(graphs);
    }
}
BENCHMARK(BM_EnumerateTriangleFree)->Arg(6)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
