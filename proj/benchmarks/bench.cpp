#include <benchmark/benchmark.h>

#include <qpc/hopf.hpp>
#include <qpc/qplane.hpp>
#include <qpc/repr.hpp>
#include <qpc/star.hpp>
#include <qpc/wz.hpp>

using namespace qpc;

static void BM_PlaneMul(benchmark::State& state) {
    PlaneElt u, v;
    for (int i = 0; i < 9; ++i) {
        u[i] = CycNum(i - 4, 2 * i - 7);
        v[i] = CycNum(3 - i, i);
    }
    for (auto _ : state) benchmark::DoNotOptimize(plane_mul(u, v));
}
BENCHMARK(BM_PlaneMul);

static void BM_HopfMultiply(benchmark::State& state) {
    const HopfData& H = algebra_H();
    CycVec u(27), v(27);
    for (int i = 0; i < 27; ++i) {
        u[i] = CycNum(i % 5 - 2, i % 3 - 1);
        v[i] = CycNum(i % 3 - 1, i % 7 - 3);
    }
    for (auto _ : state) benchmark::DoNotOptimize(H.multiply(u, v));
}
BENCHMARK(BM_HopfMultiply);

static void BM_VerifyHopfF(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify_hopf(algebra_F()));
}
BENCHMARK(BM_VerifyHopfF)->Unit(benchmark::kMillisecond);

static void BM_Act(benchmark::State& state) {
    const HopfData& H = algebra_H();
    CycVec h = H.basis_vec(gen::H_Xp);
    PlaneElt z;
    for (int i = 0; i < 9; ++i) z[i] = CycNum(i, -i);
    act(h, z); // warm the cached action matrices
    for (auto _ : state) benchmark::DoNotOptimize(act(h, z));
}
BENCHMARK(BM_Act);

static void BM_WZMul(benchmark::State& state) {
    CycVec uv(36), vv(36);
    for (int i = 0; i < 36; ++i) {
        uv[i] = CycNum(i % 5 - 2, i % 3 - 1);
        vv[i] = CycNum(i % 7 - 3, i % 2);
    }
    WZForm u = WZForm::from_vec(uv), v = WZForm::from_vec(vv);
    wz_mul(u, v); // warm the cached basis product table
    for (auto _ : state) benchmark::DoNotOptimize(wz_mul(u, v));
}
BENCHMARK(BM_WZMul);

static void BM_WZDifferential(benchmark::State& state) {
    CycVec uv(36);
    for (int i = 0; i < 36; ++i) uv[i] = CycNum(i % 5 - 2, i % 3 - 1);
    WZForm u = WZForm::from_vec(uv);
    wz_d(u);
    for (auto _ : state) benchmark::DoNotOptimize(wz_d(u));
}
BENCHMARK(BM_WZDifferential);

static void BM_Classify6e(benchmark::State& state) {
    const HModule& m = reference_modules().at("6_e");
    for (auto _ : state) benchmark::DoNotOptimize(classify(m));
}
BENCHMARK(BM_Classify6e)->Unit(benchmark::kMillisecond);

static void BM_GramPair(benchmark::State& state) {
    PlaneElt u = PlaneElt::monomial(1, 1), v = PlaneElt::monomial(1, 1);
    gram_pair(u, v); // warm the cached Gram matrix
    for (auto _ : state) benchmark::DoNotOptimize(gram_pair(u, v));
}
BENCHMARK(BM_GramPair);

BENCHMARK_MAIN();
