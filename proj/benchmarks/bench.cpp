#include <benchmark/benchmark.h>

#include <random>

#include "gsp4/adjacency.hpp"
#include "gsp4/admissible.hpp"
#include "gsp4/bm_cycles.hpp"
#include "gsp4/local_model.hpp"

using namespace gsp4;

namespace {

TamePresentation rhobar(int f) {
    std::vector<FiniteWeyl> s(f, FiniteWeyl::s1());
    std::vector<Weight> mu(f, Weight{16, 8, 0});
    return make_presentation(s, mu, 37);
}

Thresholds at37() {
    Thresholds th;
    th.rhobar = 8;
    return th;
}

void BM_AdmissibleSet(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(adm_set(kEta));
}
BENCHMARK(BM_AdmissibleSet)->Unit(benchmark::kMillisecond);

void BM_BruhatInterval(benchmark::State& st) {
    const ExtAffine t = ExtAffine::translation(kEta);
    for (auto _ : st) benchmark::DoNotOptimize(AffineSystem::full().lower_interval(t));
}
BENCHMARK(BM_BruhatInterval)->Unit(benchmark::kMillisecond);

void BM_PredictedWeights(benchmark::State& st) {
    const auto r = rhobar(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(w_question(r));
}
BENCHMARK(BM_PredictedWeights)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_WeightGraph(benchmark::State& st) {
    const auto r = rhobar(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(build_graph(r, at37()));
}
BENCHMARK(BM_WeightGraph)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BMCycle(benchmark::State& st) {
    const SerreWeight s = make_serre_weight({Weight{25, 17, 9}}, 37);
    for (auto _ : st) benchmark::DoNotOptimize(bm_cycle(s));
}
BENCHMARK(BM_BMCycle)->Unit(benchmark::kMicrosecond);

void BM_ShapeOfSandwich(benchmark::State& st) {
    FqScope scope(37);
    std::mt19937_64 rng(1);
    const auto adm = adm_dual(kEta);
    std::size_t k = 0;
    for (auto _ : st) {
        st.PauseTiming();
        auto m = random_iwahori(rng) * monomial_matrix<Fq>(adm[k++ % adm.size()]) * random_iwahori(rng);
        st.ResumeTiming();
        benchmark::DoNotOptimize(shape_of(m));
    }
}
BENCHMARK(BM_ShapeOfSandwich)->Unit(benchmark::kMillisecond);

void BM_MonodromyOverQ(benchmark::State& st) {
    std::mt19937_64 rng(2);
    const auto q = random_regcolone(rng, 37);
    const auto a = build_regcolone_matrix(q, Q(37));
    for (auto _ : st) benchmark::DoNotOptimize(monodromy_defect(a, q.monodromy(), Q(37)));
}
BENCHMARK(BM_MonodromyOverQ)->Unit(benchmark::kMillisecond);

void BM_ElementaryDivisors(benchmark::State& st) {
    std::mt19937_64 rng(3);
    const auto q = random_regcolone(rng, 37);
    const auto a = build_regcolone_matrix(q, Q(37));
    for (auto _ : st) benchmark::DoNotOptimize(e_divisor_pattern(a, Q(37)));
}
BENCHMARK(BM_ElementaryDivisors)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
