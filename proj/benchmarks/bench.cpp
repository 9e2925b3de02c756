#include <benchmark/benchmark.h>

#include "crystal/graph.hpp"
#include "crystal/invariants.hpp"
#include "crystal/quadric.hpp"
#include "crystal/realization.hpp"
#include "crystal/tiling.hpp"

using namespace crystal;

namespace {

Graph kagome() {
    return Graph({"P", "Q", "R"}, {{"e1", "Q", "P"},
                                   {"e2", "R", "Q"},
                                   {"e3", "P", "R"},
                                   {"e4", "P", "Q"},
                                   {"e5", "Q", "R"},
                                   {"e6", "R", "P"}});
}

VanishingSubgroup kagome_h(const Graph& g, const HomologyBasis& hb) {
    OneChain g1 = zero_chain(g), g2 = zero_chain(g);
    g1.c[0] = g1.c[1] = g1.c[2] = 1;
    g2.c[3] = g2.c[4] = g2.c[5] = 1;
    return make_vanishing_subgroup(g, hb, {g1, g2});
}

// complete graph on n vertices, helper for tree-number scaling
Graph complete(int n) {
    std::vector<std::string> vs;
    for (int i = 0; i < n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::tuple<std::string, std::string, std::string>> es;
    int id = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            es.emplace_back("e" + std::to_string(id++), vs[i], vs[j]);
    return Graph(vs, es);
}

void BM_TreeNumber(benchmark::State& state) {
    Graph g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tree_number(g));
}
BENCHMARK(BM_TreeNumber)->Arg(5)->Arg(8)->Arg(12);

void BM_StandardPoint(benchmark::State& state) {
    Graph g = kagome();
    HomologyBasis hb = homology_basis(g);
    VanishingSubgroup h = kagome_h(g, hb);
    for (auto _ : state) benchmark::DoNotOptimize(standard_point(g, h));
}
BENCHMARK(BM_StandardPoint);

void BM_TorusEmbedding(benchmark::State& state) {
    Graph g = kagome();
    HomologyBasis hb = homology_basis(g);
    VanishingSubgroup h = kagome_h(g, hb);
    StandardPoint z = standard_point(g, h);
    for (auto _ : state) benchmark::DoNotOptimize(torus_embedding(g, z));
}
BENCHMARK(BM_TorusEmbedding);

void BM_Height(benchmark::State& state) {
    Graph g = kagome();
    HomologyBasis hb = homology_basis(g);
    VanishingSubgroup h = kagome_h(g, hb);
    for (auto _ : state) benchmark::DoNotOptimize(height(h));
}
BENCHMARK(BM_Height);

void BM_SecantPoint(benchmark::State& state) {
    Graph g = kagome();
    HomologyBasis hb = homology_basis(g);
    VanishingSubgroup h = kagome_h(g, hb);
    StandardPoint z = standard_point(g, h);
    QuadricPresentation q = quadric_presentation(g);
    RatVec dir(g.edge_count(), Rational(0));
    // direction inside the Kirchhoff hyperplanes: a fundamental cycle
    for (int j = 0; j < g.edge_count(); ++j) dir[j] = Rational(hb.cycles[0].c[j]);
    for (auto _ : state) benchmark::DoNotOptimize(secant_point(q, z.coords, dir));
}
BENCHMARK(BM_SecantPoint);

void BM_CensusKagomeSmall(benchmark::State& state) {
    Graph g = kagome();
    for (auto _ : state) benchmark::DoNotOptimize(tiling_census(g, 6));
}
BENCHMARK(BM_CensusKagomeSmall)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
