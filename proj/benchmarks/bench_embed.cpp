#include <benchmark/benchmark.h>

#include "matchbook/generators.hpp"
#include "matchbook/io.hpp"
#include "matchbook/oracle.hpp"
#include "matchbook/reduction.hpp"

using namespace matchbook;

namespace {

Graph fixture(int n) { return gen_maximal_outerplanar(n, 7); }

void BM_recognize(benchmark::State& state) {
    Graph g = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto w = recognize_outerplanar(g);
        benchmark::DoNotOptimize(w.chords.data());
    }
}
BENCHMARK(BM_recognize)->Arg(64)->Arg(256)->Arg(1024);

void BM_embed_outerplanar(benchmark::State& state) {
    Graph g = fixture(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto emb = embed_outerplanar(g);
        benchmark::DoNotOptimize(emb.pages);
    }
}
BENCHMARK(BM_embed_outerplanar)->Arg(64)->Arg(256)->Arg(1024);

void BM_verify(benchmark::State& state) {
    Graph g = fixture(static_cast<int>(state.range(0)));
    BookEmbedding emb = embed_outerplanar(g);
    for (auto _ : state) {
        auto report = verify(g, emb);
        benchmark::DoNotOptimize(report.ok);
    }
}
BENCHMARK(BM_verify)->Arg(64)->Arg(256)->Arg(1024);

void BM_exact_mbt(benchmark::State& state) {
    Graph g = gen_maximal_outerplanar(static_cast<int>(state.range(0)), 3);
    for (auto _ : state) {
        auto result = exact_mbt(g, g.vertex_count());
        benchmark::DoNotOptimize(result->mbt);
    }
}
BENCHMARK(BM_exact_mbt)->Arg(6)->Arg(7)->Arg(8);

void BM_render_svg(benchmark::State& state) {
    Graph g = fixture(static_cast<int>(state.range(0)));
    BookEmbedding emb = embed_outerplanar(g);
    for (auto _ : state) {
        auto svg = render_svg(g, emb);
        benchmark::DoNotOptimize(svg.data());
    }
}
BENCHMARK(BM_render_svg)->Arg(64)->Arg(256);

void BM_serialize_roundtrip(benchmark::State& state) {
    Graph g = fixture(static_cast<int>(state.range(0)));
    BookEmbedding emb = embed_outerplanar(g);
    for (auto _ : state) {
        auto emb2 = parse_certificate(serialize_certificate(emb));
        benchmark::DoNotOptimize(emb2.pages);
    }
}
BENCHMARK(BM_serialize_roundtrip)->Arg(64)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
