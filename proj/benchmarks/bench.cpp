#include <benchmark/benchmark.h>

#include "parhiggs/stability.hpp"
#include "parhiggs/verystable.hpp"
#include "parhiggs/generators.hpp"

using namespace parhiggs;

namespace {

PolyMat random_polymat(SplitMix64& rng, int n, int deg) {
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rational> c;
            for (int d = 0; d <= deg; ++d) c.push_back(Rational(rng.small_int(4)));
            m.at(i, j) = Poly(std::move(c));
        }
    return m;
}

ParabolicBundle sp2_bundle(int r, std::uint64_t seed) {
    ParabolicBundle e;
    for (int p = 0; p < r; ++p) e.curve.points.push_back(Rational(p % 2 == 0 ? p / 2 : -(p + 1) / 2));
    e.splitting = {0, 0};
    SplitMix64 rng(seed);
    for (int p = 0; p < r; ++p) {
        e.flags.push_back(random_invertible(rng, 2));
        e.weights.push_back({Rational(1, 4), Rational(3, 4)});
    }
    return e;
}

void BM_CharPoly(benchmark::State& state) {
    SplitMix64 rng(1);
    const PolyMat m = random_polymat(rng, static_cast<int>(state.range(0)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(char_poly(m));
}
BENCHMARK(BM_CharPoly)->Arg(2)->Arg(4)->Arg(6);

void BM_Pfaffian(benchmark::State& state) {
    SplitMix64 rng(2);
    const int n = static_cast<int>(state.range(0));
    PolyMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            m.at(i, j) = Poly(std::vector<Rational>{Rational(rng.small_int(4)), Rational(rng.small_int(4))});
            m.at(j, i) = -m.at(i, j);
        }
    for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->Arg(4)->Arg(6);

void BM_KernelBasis(benchmark::State& state) {
    SplitMix64 rng(3);
    const int n = static_cast<int>(state.range(0));
    RatMat m(n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2 * n; ++j) m.at(i, j) = random_rational(rng, 5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelBasis)->Arg(10)->Arg(25);

void BM_CompatibleSpace(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const auto e = sp2_bundle(r, 100 + r);
    const auto p = standard_pairing(2, PairingSymmetry::Antisymmetric);
    for (auto _ : state)
        benchmark::DoNotOptimize(compatible_higgs_space(e, p, SectionMode::Strong));
}
BENCHMARK(BM_CompatibleSpace)->Arg(4)->Arg(6)->Arg(8);

void BM_StabilityRank2(benchmark::State& state) {
    const auto e = sp2_bundle(static_cast<int>(state.range(0)), 55);
    const auto p = standard_pairing(2, PairingSymmetry::Antisymmetric);
    for (auto _ : state) benchmark::DoNotOptimize(stability_decide_rank2(e, p, nullptr));
}
BENCHMARK(BM_StabilityRank2)->Arg(3)->Arg(5);

void BM_VeryStableVerdict(benchmark::State& state) {
    const auto e = sp2_bundle(static_cast<int>(state.range(0)), 77);
    const auto p = standard_pairing(2, PairingSymmetry::Antisymmetric);
    for (auto _ : state) benchmark::DoNotOptimize(very_stability_verdict(e, p));
}
BENCHMARK(BM_VeryStableVerdict)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
