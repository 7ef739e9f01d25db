#include <benchmark/benchmark.h>

#include "reptiler/tiling.hpp"

using namespace reptiler;

namespace {

QF qr(long n, long d = 1) { return QF::rational(Rat(n, d), 0); }

PolyQ sigma_square(const QuadSpec<QF>& q) {
    QF side = q.a + q.b;
    QF z = side.zero();
    return PolyQ{{PointQ{z, z}, PointQ{side, z}, PointQ{side, side}, PointQ{z, side}}};
}

void BM_qf_mul(benchmark::State& state) {
    QF u(Rat(314, 100), Rat(-27, 31), 7);
    QF v(Rat(5, 99), Rat(123, 7), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(u * v);
    }
}
BENCHMARK(BM_qf_mul);

void BM_qf_sign_mixed(benchmark::State& state) {
    QF u(Rat(1393, 985), Rat(-1, 1), 2);  // near-zero sign decision
    for (auto _ : state) {
        benchmark::DoNotOptimize(u.sign());
    }
}
BENCHMARK(BM_qf_sign_mixed);

void BM_region_difference(benchmark::State& state) {
    auto q = build_family3(Rat(1, 5));
    RegionQ region = region_from_polygon(sigma_square(q));
    Tiling pin = f0_square_tiling(q);
    for (auto _ : state) {
        benchmark::DoNotOptimize(region_difference(region, pin.placements[0].shape));
    }
}
BENCHMARK(BM_region_difference);

void BM_corner_placements(benchmark::State& state) {
    auto q = build_family3(Rat(1, 5));
    RegionQ region = region_from_polygon(sigma_square(q));
    SearchConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_corner_placements(region, q.polygon(), cfg));
    }
}
BENCHMARK(BM_corner_placements);

void BM_single_square_search(benchmark::State& state) {
    auto q = build_family3(Rat(1, 5));
    RegionQ region = region_from_polygon(sigma_square(q));
    SearchConfig cfg;
    cfg.mode = SearchConfig::Mode::COUNT;
    for (auto _ : state) {
        benchmark::DoNotOptimize(tile_region(region, q.polygon(), cfg));
    }
}
BENCHMARK(BM_single_square_search);

void BM_verify_pinwheel(benchmark::State& state) {
    Tiling t = f0_square_tiling(build_family3(Rat(1, 5)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_tiling(t));
    }
}
BENCHMARK(BM_verify_pinwheel);

}  // namespace

BENCHMARK_MAIN();
