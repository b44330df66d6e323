#include <benchmark/benchmark.h>

#include "coch/generate.hpp"
#include "coch/model.hpp"
#include "coch/perturb.hpp"

using namespace coch;

namespace {

Matrix random_square(const Field& f, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, rng.scalar(f));
    return m;
}

void bm_rank_f5(benchmark::State& state) {
    Matrix m = random_square(Field::fp(5), static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(bm_rank_f5)->Arg(16)->Arg(40)->Arg(80);

void bm_kernel_rational(benchmark::State& state) {
    Matrix m = random_square(Field::rationals(), static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(bm_kernel_rational)->Arg(8)->Arg(16)->Arg(32);

void bm_cohomology(benchmark::State& state) {
    GenConfig cfg;
    cfg.lo = -3;
    cfg.hi = 3;
    cfg.max_dim = static_cast<int>(state.range(0));
    Complex x = random_complex(cfg.with_seed(3));
    for (auto _ : state) benchmark::DoNotOptimize(cohomology(x));
}
BENCHMARK(bm_cohomology)->Arg(4)->Arg(8);

void bm_trick2(benchmark::State& state) {
    GenConfig cfg;
    cfg.lo = -3;
    cfg.hi = 3;
    cfg.max_dim = static_cast<int>(state.range(0));
    Sdr sdr = random_sdr(cfg.with_seed(4));
    for (auto _ : state) benchmark::DoNotOptimize(trick2(sdr));
}
BENCHMARK(bm_trick2)->Arg(4)->Arg(8);

void bm_factor_coch(benchmark::State& state) {
    GenConfig cfg;
    cfg.lo = 0;
    cfg.hi = 3;
    cfg.max_dim = static_cast<int>(state.range(0));
    Rng rng(5);
    GeneratedComplex c = generate_random_complex(cfg, rng);
    GeneratedComplex d = generate_random_complex(cfg, rng);
    GradedMap alpha = random_chain_map(c.structure, d.structure, rng);
    for (auto _ : state) benchmark::DoNotOptimize(factor_coch_c_fw(alpha));
}
BENCHMARK(bm_factor_coch)->Arg(3)->Arg(5);

void bm_factor_contr(benchmark::State& state) {
    GenConfig cfg;
    cfg.lo = -1;
    cfg.hi = 1;
    cfg.max_dim = static_cast<int>(state.range(0));
    Rng rng(6);
    GeneratedContraction a = generate_random_contraction(cfg, rng);
    GeneratedContraction b = generate_random_contraction(cfg, rng);
    ArMorphism m = trick1(random_chain_map(a.structure, b.structure, rng), a.contraction.ar,
                          b.contraction.ar);
    ContrMorphism f = trick3(SdrMorphism{a.contraction, b.contraction, m.f});
    for (auto _ : state) benchmark::DoNotOptimize(factor_contr(f, Flavor::C_FW));
}
BENCHMARK(bm_factor_contr)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
